#include <algorithm>
#include <cctype>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hlchow/chow.hpp"
#include "hlchow/fan.hpp"
#include "hlchow/graph_matroid.hpp"
#include "hlchow/verify.hpp"
#include "hlchow/weights.hpp"

namespace {

using namespace hlchow;

// command line is syntactically valid but the flag combination is not
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      out.push_back(v);
    } catch (const std::exception&) {
      throw ValidationError(std::string(what) + ": expected comma-separated integers, got '" +
                            text + "'");
    }
  }
  if (out.empty())
    throw ValidationError(std::string(what) + ": empty list");
  return out;
}

Edge parse_edge_flag(const std::string& text) {
  const auto v = parse_int_list(text, "--eliminate");
  if (v.size() != 2)
    throw ValidationError("--eliminate: expected exactly two vertices, got '" + text + "'");
  return make_edge(v[0], v[1]);
}

// any weight vector reduces to the canonical profile with heavy = {1..m}
HeavyLightProfile canonical_profile(const std::string& weights) {
  const HeavyLightProfile raw = classify(parse_weights(weights));
  return profile_from_counts(raw.m(), raw.n());
}

// divisor labels may be given by either side of the node; the canonical
// representative omits marking 1
std::vector<int> normalize_label(int n, std::vector<int> side) {
  std::sort(side.begin(), side.end());
  side.erase(std::unique(side.begin(), side.end()), side.end());
  if (side.empty() || side.front() < 1 || side.back() > n)
    throw ValidationError("flat label must be a subset of {1.." + std::to_string(n) + "}");
  if (side.front() != 1) return side;
  std::vector<int> complement;
  for (int v = 1; v <= n; ++v)
    if (!std::binary_search(side.begin(), side.end(), v)) complement.push_back(v);
  return complement;
}

// ---- product expressions ---------------------------------------------------
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := rational | divisor
//   divisor:= 'D' ['^'] '{' int (',' int)* '}' ['^' int]
//
// e.g. "D^{2,3}", "2*D{2,4}^2 - 1/3*D^{2,3}*D^{2,3,4}"

class ExpressionParser {
 public:
  ExpressionParser(const Presentation& pres, std::string text)
      : pres_(pres) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) text_.push_back(c);
  }

  Polynomial parse() {
    Polynomial poly;
    if (text_.empty()) throw ValidationError("empty expression");
    int sign = consume_sign();
    while (true) {
      auto [coef, mono] = term();
      poly.emplace_back(std::move(mono), Rat(sign) * coef);
      if (done()) break;
      if (text_[pos_] == '+' || text_[pos_] == '-')
        sign = consume_sign();
      else
        throw ValidationError("unexpected '" + std::string(1, text_[pos_]) +
                              "' in expression");
    }
    return poly;
  }

 private:
  bool done() const { return pos_ >= text_.size(); }

  int consume_sign() {
    if (!done() && text_[pos_] == '+') ++pos_;
    if (!done() && text_[pos_] == '-') {
      ++pos_;
      return -1;
    }
    return 1;
  }

  std::pair<Rat, Monomial> term() {
    Rat coef(1);
    std::map<int, int> exponents;
    bool first = true;
    while (true) {
      if (!first) {
        if (done() || text_[pos_] != '*') break;
        ++pos_;
      }
      first = false;
      if (done()) throw ValidationError("expression ends inside a term");
      if (text_[pos_] == 'D')
        divisor_factor(exponents);
      else
        coef *= number();
    }
    Monomial mono;
    for (const auto& [gen, exp] : exponents)
      if (exp > 0) mono.factors.emplace_back(gen, exp);
    return {coef, mono};
  }

  Rat number() {
    const std::size_t start = pos_;
    while (!done() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
                       text_[pos_] == '/'))
      ++pos_;
    if (start == pos_)
      throw ValidationError("expected a number or D^{...} at '" +
                            text_.substr(start) + "'");
    return parse_rational(text_.substr(start, pos_ - start));
  }

  void divisor_factor(std::map<int, int>& exponents) {
    ++pos_;  // 'D'
    if (!done() && text_[pos_] == '^') ++pos_;
    if (done() || text_[pos_] != '{')
      throw ValidationError("expected '{' after D");
    ++pos_;
    std::vector<int> label;
    while (true) {
      label.push_back(integer());
      if (done()) throw ValidationError("unterminated divisor label");
      if (text_[pos_] == ',') {
        ++pos_;
        continue;
      }
      if (text_[pos_] == '}') {
        ++pos_;
        break;
      }
      throw ValidationError("bad character in divisor label");
    }
    int exp = 1;
    if (!done() && text_[pos_] == '^') {
      ++pos_;
      exp = integer();
    }
    label = normalize_label(pres_.n, std::move(label));
    const int gen = pres_.generator_index(FlatLabel{label});
    if (gen < 0)
      throw ValidationError("D^" + flat_to_string(FlatLabel{label}) +
                            " is not a boundary divisor of this space");
    exponents[gen] += exp;
  }

  int integer() {
    const std::size_t start = pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ValidationError("expected an integer in expression");
    return std::stoi(text_.substr(start, pos_ - start));
  }

  const Presentation& pres_;
  std::string text_;
  std::size_t pos_ = 0;
};

// expansion of a class in the quotient-basis monomials, paper notation
std::string class_to_text(const Presentation& pres, const GradedBasis& basis,
                          const ChowClass& c) {
  if (c.is_zero()) return "0";
  const GradedPiece& piece = basis.piece(c.degree);
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < c.coords.size(); ++i) {
    if (c.coords[i] == 0) continue;
    const Rat& q = c.coords[i];
    if (first) {
      if (q < 0) out += "-";
      first = false;
    } else {
      out += q < 0 ? " - " : " + ";
    }
    const Rat mag = abs(q);
    if (mag != 1) out += to_string(mag) + "*";
    out += monomial_to_string(pres, piece.monomials[piece.basis[i]]);
  }
  return out;
}

nlohmann::ordered_json class_to_json(const Presentation& pres,
                                     const GradedBasis& basis,
                                     const ChowClass& c) {
  nlohmann::ordered_json j;
  j["degree"] = c.degree;
  j["terms"] = nlohmann::ordered_json::array();
  if (c.degree <= pres.grading_dimension()) {
    const GradedPiece& piece = basis.piece(c.degree);
    for (std::size_t i = 0; i < c.coords.size(); ++i) {
      if (c.coords[i] == 0) continue;
      nlohmann::ordered_json term;
      term["monomial"] = monomial_to_string(pres, piece.monomials[piece.basis[i]]);
      term["coeff"] = to_string(c.coords[i]);
      j["terms"].push_back(std::move(term));
    }
  }
  return j;
}

void print_json(const nlohmann::ordered_json& j) { std::cout << j.dump(2) << "\n"; }

// ---- subcommand bodies -------------------------------------------------

void run_classify(const std::string& weights, bool json) {
  const WeightVector w = parse_weights(weights);
  const HeavyLightProfile p = classify(w);
  const WeightVector canonical = canonical_form(p);
  if (json) {
    nlohmann::ordered_json j;
    j["heavy"] = p.heavy;
    j["light"] = p.light;
    j["m"] = p.m();
    j["n"] = p.n();
    j["canonical_weights"] = weight_string(canonical);
    print_json(j);
    return;
  }
  std::cout << "heavy (m=" << p.m() << "):";
  for (int i : p.heavy) std::cout << " " << i;
  std::cout << "\nlight:";
  for (int i : p.light) std::cout << " " << i;
  std::cout << "\ncanonical form: " << weight_string(canonical) << "\n";
}

void run_graph(const std::string& weights, bool json) {
  const HeavyLightProfile p = canonical_profile(weights);
  const ReducedWeightGraph g = reduced_weight_graph(p);
  if (json) {
    nlohmann::ordered_json j;
    j["n"] = g.n;
    j["m"] = g.m;
    j["vertices"] = g.vertices();
    j["edges"] = nlohmann::ordered_json::array();
    for (const Edge& e : g.edges)
      j["edges"].push_back(std::vector<int>{e.first, e.second});
    print_json(j);
    return;
  }
  std::cout << "reduced weight graph on {2.." << g.n << "}\n";
  std::cout << "heavy vertices:";
  for (int v = 2; v <= g.m; ++v) std::cout << " " << v;
  std::cout << "\nedges (" << g.edges.size() << "):";
  for (const Edge& e : g.edges) std::cout << " " << e.first << "-" << e.second;
  std::cout << "\n";
}

void run_flats(const std::string& weights, bool json) {
  const HeavyLightProfile p = canonical_profile(weights);
  const auto flats = one_connected_flats(reduced_weight_graph(p));
  if (json) {
    nlohmann::ordered_json j;
    j["flats"] = nlohmann::ordered_json::array();
    for (const FlatLabel& s : flats) j["flats"].push_back(s.vertices);
    print_json(j);
    return;
  }
  std::cout << "1-connected flats (" << flats.size() << "):\n";
  for (const FlatLabel& s : flats) std::cout << "  " << flat_to_string(s) << "\n";
}

void run_fan(const std::string& weights, const std::string& eliminate, bool json,
             int max_degree) {
  const HeavyLightProfile p = canonical_profile(weights);
  Fan fan = eliminate.empty() ? build_fan(p)
                              : build_fan(p, parse_edge_flag(eliminate));
  if (max_degree >= 0)
    for (int d = max_degree + 1; d <= fan.max_dim(); ++d)
      fan.cones_by_dim[d].clear();
  std::cout << (json ? fan_to_json(fan) : fan_to_text(fan));
}

void run_present(const std::string& weights, const std::string& eliminate,
                 bool json) {
  const HeavyLightProfile p = canonical_profile(weights);
  const Presentation pres =
      eliminate.empty() ? heavy_light_presentation(p)
                        : heavy_light_presentation(p, parse_edge_flag(eliminate));
  const std::vector<long> hilbert = hilbert_function(pres);
  std::cout << (json ? presentation_to_json(pres, hilbert)
                     : presentation_to_text(pres, hilbert));
}

void run_hilbert(const std::string& weights, bool json, int max_degree) {
  const HeavyLightProfile p = canonical_profile(weights);
  std::vector<long> h = hilbert_function(heavy_light_presentation(p));
  if (max_degree >= 0 && max_degree + 1 < static_cast<int>(h.size()))
    h.resize(max_degree + 1);
  if (json) {
    nlohmann::ordered_json j;
    j["hilbert"] = h;
    print_json(j);
    return;
  }
  for (std::size_t k = 0; k < h.size(); ++k)
    std::cout << (k ? " " : "") << h[k];
  std::cout << "\n";
}

void run_multiply(const std::string& weights, const std::string& expr_a,
                  const std::string& expr_b, bool json) {
  const HeavyLightProfile p = canonical_profile(weights);
  const Presentation pres = heavy_light_presentation(p);
  const GradedBasis basis = graded_basis(pres);
  const ChowClass a = reduce(pres, basis, ExpressionParser(pres, expr_a).parse());
  const ChowClass b = reduce(pres, basis, ExpressionParser(pres, expr_b).parse());
  const ChowClass product = multiply(pres, basis, a, b);
  if (json) {
    nlohmann::ordered_json j;
    j["factor_degrees"] = std::vector<int>{a.degree, b.degree};
    j["product"] = class_to_json(pres, basis, product);
    print_json(j);
    return;
  }
  std::cout << "(" << class_to_text(pres, basis, a) << ") * ("
            << class_to_text(pres, basis, b)
            << ") = " << class_to_text(pres, basis, product) << "\n";
}

void run_pullback(const std::string& weights, bool json) {
  const HeavyLightProfile p = canonical_profile(weights);
  const PullbackReport report = pullback(p);
  if (json) {
    nlohmann::ordered_json j;
    j["source_weights"] = report.source.weights;
    j["target_weights"] = report.target.weights;
    j["generator_map"] = report.generator_map;
    j["source_hilbert"] = report.source_hilbert;
    j["image_ranks"] = report.image_ranks;
    j["relations_preserved"] = report.relations_preserved;
    j["injective"] = report.injective;
    print_json(j);
    return;
  }
  std::cout << "source: " << report.source.weights << "\n";
  std::cout << "target: " << report.target.weights << "\n";
  std::cout << "generators mapped: " << report.generator_map.size() << " of "
            << report.target.generators.size() << " target generators hit\n";
  std::cout << "relations preserved: "
            << (report.relations_preserved ? "yes" : "no") << "\n";
  std::cout << "source ranks:";
  for (long h : report.source_hilbert) std::cout << " " << h;
  std::cout << "\nimage ranks: ";
  for (std::size_t k = 0; k < report.image_ranks.size(); ++k)
    std::cout << (k ? " " : "") << report.image_ranks[k];
  std::cout << "\ninjective: " << (report.injective ? "yes" : "no") << "\n";
}

void run_dualgraph(const std::string& weights, const std::string& flat,
                   bool json) {
  const HeavyLightProfile p = canonical_profile(weights);
  const auto side = parse_int_list(flat, "--flat");
  DualGraph dg;
  try {
    dg = dual_graph_two_sided(p, side);
  } catch (const InvalidSourceLabel& e) {
    throw ValidationError(e.what());
  }
  if (json) {
    nlohmann::ordered_json j;
    j["legs"] = nlohmann::ordered_json::array();
    j["legs"].push_back(dg.side_s);
    j["legs"].push_back(dg.side_rest);
    print_json(j);
    return;
  }
  std::cout << dual_graph_to_string(dg);
}

int run_verify(const std::string& weights, int all_upto,
               const std::string& level, bool json) {
  if (weights.empty() == (all_upto < 0))
    throw UsageError("verify needs exactly one of --weights or --all-upto");
  const bool full = level == "full";
  const VerifyReport report =
      weights.empty() ? verify_all(all_upto, full)
                      : verify_profile(canonical_profile(weights), full);
  if (json) {
    nlohmann::ordered_json j;
    j["level"] = full ? "full" : "fast";
    j["checks"] = nlohmann::ordered_json::array();
    for (const CheckResult& c : report.checks) {
      nlohmann::ordered_json one;
      one["name"] = c.name;
      one["passed"] = c.passed;
      if (!c.detail.empty()) one["detail"] = c.detail;
      j["checks"].push_back(std::move(one));
    }
    j["all_passed"] = report.all_passed();
    print_json(j);
  } else {
    std::cout << report.to_text();
  }
  return report.all_passed() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chow rings of heavy/light moduli of weighted stable rational curves"};
  app.require_subcommand(1);
  int exit_code = 0;

  std::string weights, eliminate, flat, expr_a, expr_b;
  std::string level = "fast";
  bool json = false;
  int max_degree = -1, all_upto = -1;

  auto* classify_cmd = app.add_subcommand("classify", "heavy/light classification");
  classify_cmd->add_option("--weights", weights, "comma-separated rational weights")
      ->required();
  classify_cmd->add_flag("--json", json, "machine-readable output");
  classify_cmd->callback([&] { run_classify(weights, json); });

  auto* graph_cmd = app.add_subcommand("graph", "reduced weight graph");
  graph_cmd->add_option("--weights", weights)->required();
  graph_cmd->add_flag("--json", json);
  graph_cmd->callback([&] { run_graph(weights, json); });

  auto* flats_cmd = app.add_subcommand("flats", "1-connected flats / boundary divisors");
  flats_cmd->add_option("--weights", weights)->required();
  flats_cmd->add_flag("--json", json);
  flats_cmd->callback([&] { run_flats(weights, json); });

  auto* fan_cmd = app.add_subcommand("fan", "nested-sets subdivision of the Bergman fan");
  fan_cmd->add_option("--weights", weights)->required();
  fan_cmd->add_option("--eliminate", eliminate, "pair i,j to quotient out (default 2,3)");
  fan_cmd->add_option("--max-degree", max_degree, "largest cone dimension to print");
  fan_cmd->add_flag("--json", json);
  fan_cmd->callback([&] { run_fan(weights, eliminate, json, max_degree); });

  auto* present_cmd = app.add_subcommand("present", "Chow ring presentation");
  present_cmd->add_option("--weights", weights)->required();
  present_cmd->add_option("--eliminate", eliminate, "pair i,j to quotient out (default 2,3)");
  present_cmd->add_flag("--json", json);
  present_cmd->callback([&] { run_present(weights, eliminate, json); });

  auto* hilbert_cmd = app.add_subcommand("hilbert", "graded ranks of the Chow ring");
  hilbert_cmd->add_option("--weights", weights)->required();
  hilbert_cmd->add_option("--max-degree", max_degree, "print h_0..h_k only");
  hilbert_cmd->add_flag("--json", json);
  hilbert_cmd->callback([&] { run_hilbert(weights, json, max_degree); });

  auto* multiply_cmd = app.add_subcommand("multiply", "product of two classes");
  multiply_cmd->add_option("--weights", weights)->required();
  multiply_cmd->add_option("expr_a", expr_a, "first factor, e.g. \"D^{2,3}\"")->required();
  multiply_cmd->add_option("expr_b", expr_b, "second factor")->required();
  multiply_cmd->add_flag("--json", json);
  multiply_cmd->callback([&] { run_multiply(weights, expr_a, expr_b, json); });

  auto* pullback_cmd = app.add_subcommand("pullback", "ring map to the all-ones space");
  pullback_cmd->add_option("--weights", weights)->required();
  pullback_cmd->add_flag("--json", json);
  pullback_cmd->callback([&] { run_pullback(weights, json); });

  auto* dual_cmd = app.add_subcommand("dualgraph", "dual graph of a boundary divisor");
  dual_cmd->add_option("--weights", weights)->required();
  dual_cmd->add_option("--flat", flat, "marking subset, either side of the node")
      ->required();
  dual_cmd->add_flag("--json", json);
  dual_cmd->callback([&] { run_dualgraph(weights, flat, json); });

  auto* verify_cmd = app.add_subcommand("verify", "structural invariant suite");
  verify_cmd->add_option("--weights", weights, "verify one weight vector");
  verify_cmd->add_option("--all-upto", all_upto, "verify every profile with n <= N");
  verify_cmd->add_option("--level", level, "fast|full (default fast)")
      ->check(CLI::IsMember({"fast", "full"}));
  verify_cmd->add_flag("--json", json);
  verify_cmd->callback([&] { exit_code = run_verify(weights, all_upto, level, json); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const NotHeavyLight& e) {
    std::cerr << "error: NotHeavyLight: " << e.what() << "\n";
    return 1;
  } catch (const TooFewHeavy& e) {
    std::cerr << "error: TooFewHeavy: " << e.what() << "\n";
    return 1;
  } catch (const MalformedRational& e) {
    std::cerr << "error: MalformedRational: " << e.what() << "\n";
    return 1;
  } catch (const WeightOutOfRange& e) {
    std::cerr << "error: WeightOutOfRange: " << e.what() << "\n";
    return 1;
  } catch (const TotalWeightTooSmall& e) {
    std::cerr << "error: TotalWeightTooSmall: " << e.what() << "\n";
    return 1;
  } catch (const TooFewEntries& e) {
    std::cerr << "error: TooFewEntries: " << e.what() << "\n";
    return 1;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ContractError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
