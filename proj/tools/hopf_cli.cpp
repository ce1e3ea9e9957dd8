// Batch command-line surface over the library.
//
// Exit codes: 0 success (and predicate "true"), 1 predicate "false",
// 2 input/usage error, 3 internal theorem violation.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <hopf/catalog.hpp>
#include <hopf/json_io.hpp>

namespace {

using namespace hopf;

constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;
constexpr int kExitInput = 2;
constexpr int kExitTheorem = 3;

struct Options {
  std::string format = "json";
  int verbosity = 0;
  int max_dim = 12;  // ceiling for double construction
};

void vlog(const Options& opt, const std::string& msg) {
  if (opt.verbosity > 0) std::cerr << "[hopf] " << msg << "\n";
}

std::string read_input_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool is_catalog_id(const std::string& s) {
  for (const auto& e : catalog())
    if (e.id == s) return true;
  return false;
}

ordered_json parse_json_text(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error(std::string("JSON syntax error: ") + e.what());
  }
}

// input is a catalog id or a path to an algebra JSON file ("-" = stdin)
AnyHopf load_algebra(const std::string& input) {
  if (is_catalog_id(input)) return build_catalog_entry(input);
  ordered_json j = parse_json_text(read_input_text(input));
  if (!j.is_object() || !j.contains("field")) throw parse_error("input: expected algebra object with 'field'");
  FieldSpec fs = field_from_json(j.at("field"));
  if (fs.kind == FieldSpec::Kind::rational) return AnyHopf(algebra_from_json(RatField{}, j));
  return AnyHopf(algebra_from_json(ZpField(fs.p), j));
}

void emit(const Options& opt, const ordered_json& j, const std::string& text_rendering) {
  if (opt.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text_rendering;
}

template <class F>
void check_ceiling(const Options& opt, const HopfAlgebra<F>& h) {
  if (h.n > opt.max_dim)
    throw parse_error("dimension " + std::to_string(h.n) + " exceeds the double-construction ceiling " +
                      std::to_string(opt.max_dim) + " (raise with --max-dim)");
}

inline std::string yesno(bool b) { return b ? "yes" : "no"; }

// ---------------------------------------------------------------------------
// command bodies (templated over the field)

template <class F>
int cmd_validate(const Options& opt, const HopfAlgebra<F>& h) {
  AxiomReport rep;
  try {
    rep = validate_axioms(h);
  } catch (const structure_error& e) {
    throw parse_error(e.what());
  }
  std::ostringstream txt;
  txt << "algebra: " << h.name << "\n"
      << "axioms: " << (rep.ok() ? "pass" : "FAIL") << "\n";
  for (const auto& f : rep.failures) {
    txt << "  failed " << f.axiom << " at";
    for (int w : f.witness) txt << " " << w;
    txt << "\n";
  }
  emit(opt, validation_to_json(rep), txt.str());
  return rep.ok() ? kExitOk : kExitFalse;
}

template <class F>
int cmd_info(const Options& opt, const HopfAlgebra<F>& h) {
  bool ok = validate_axioms(h).ok();
  ordered_json j;
  j["name"] = h.name;
  j["field"] = field_to_json(h.fld.spec());
  j["dim"] = h.n;
  j["basis"] = h.basis_names;
  j["valid"] = ok;
  std::ostringstream txt;
  txt << "name: " << h.name << "\nfield: " << h.fld.name() << "\ndim: " << h.n
      << "\nvalid: " << yesno(ok) << "\n";
  emit(opt, j, txt.str());
  return kExitOk;
}

template <class F>
int cmd_dual(const Options& opt, const HopfAlgebra<F>& h) {
  require_validated(h);
  auto d = dual(h);
  emit(opt, algebra_to_json(d), "dual algebra '" + d.name + "' emitted as JSON only\n");
  return kExitOk;
}

template <class F>
int cmd_double(const Options& opt, const HopfAlgebra<F>& h) {
  require_validated(h);
  check_ceiling(opt, h);
  vlog(opt, "constructing the double of " + h.name);
  auto qt = drinfeld_double(h);
  emit(opt, quasitriangular_to_json(qt),
       "double '" + qt.algebra.name + "' of dimension " + std::to_string(qt.algebra.n) +
           " emitted as JSON only\n");
  return kExitOk;
}

template <class F>
int cmd_integrals(const Options& opt, const HopfAlgebra<F>& h) {
  require_validated(h);
  auto [L, l] = compute_integrals(h);
  ordered_json j;
  j["left_integral"] = detail::vector_to_json<F>(L);
  j["right_integral_dual"] = detail::vector_to_json<F>(l);
  std::ostringstream txt;
  txt << "left integral: ";
  for (const auto& x : L) txt << x.to_string() << " ";
  txt << "\nright integral on the dual: ";
  for (const auto& x : l) txt << x.to_string() << " ";
  txt << "\n";
  emit(opt, j, txt.str());
  return kExitOk;
}

template <class F>
int cmd_grouplikes(const Options& opt, const HopfAlgebra<F>& h) {
  require_validated(h);
  auto g = grouplikes(h);
  std::ostringstream txt;
  txt << "grouplikes: " << g.size() << " (warnings: " << g.warnings << ")\n";
  for (const auto& e : g.elements) {
    txt << "  ";
    for (const auto& x : e) txt << x.to_string() << " ";
    txt << "\n";
  }
  emit(opt, grouplikes_to_json(g), txt.str());
  return kExitOk;
}

template <class F>
int cmd_radford(const Options& opt, const HopfAlgebra<F>& h) {
  require_validated(h);
  auto rd = radford_data(h);
  std::ostringstream txt;
  txt << "algebra: " << h.name << "\nunimodular: " << yesno(unimodular(h, rd))
      << "\ndual unimodular: " << yesno(dual_unimodular(h, rd))
      << "\nfourth-power antipode formula: " << (rd.s4_verified ? "verified" : "FAILED") << "\n";
  emit(opt, radford_to_json(h, rd), txt.str());
  return kExitOk;
}

template <class F>
int cmd_spherical(const Options& opt, const HopfAlgebra<F>& h) {
  require_validated(h);
  auto rd = radford_data(h);
  auto gh = grouplikes(h);
  bool verdict = spherical_dsps(h, rd, gh);
  ordered_json j;
  j["algebra"] = h.name;
  j["spherical_dsps"] = verdict;
  emit(opt, j, "spherical (pivotal square root of the distinguished data): " + yesno(verdict) + "\n");
  return verdict ? kExitOk : kExitFalse;
}

template <class F>
int cmd_modular(const Options& opt, const HopfAlgebra<F>& h) {
  require_validated(h);
  check_ceiling(opt, h);
  auto rep = classify(h);
  ordered_json j;
  j["algebra"] = h.name;
  j["factorizable"] = rep.factorizable;
  j["ribbon_count"] = (int)rep.ribbon_certificates.size();
  j["modular"] = rep.modular;
  emit(opt, j,
       "factorizable: " + yesno(rep.factorizable) +
           "\nribbon elements: " + std::to_string(rep.ribbon_certificates.size()) +
           "\nmodular: " + yesno(rep.modular) + "\n");
  return rep.modular ? kExitOk : kExitFalse;
}

template <class F>
int cmd_classify(const Options& opt, const HopfAlgebra<F>& h) {
  require_validated(h);
  check_ceiling(opt, h);
  vlog(opt, "classifying " + h.name);
  auto rep = classify(h);
  std::ostringstream txt;
  txt << "algebra: " << rep.algebra << "\n"
      << "dim(double): " << rep.dim_double << "\n"
      << "pivotal grouplikes: " << rep.pivotal_count << "\n"
      << "ribbon elements: " << rep.ribbon_certificates.size() << "\n"
      << "square-root pairs: " << rep.kr_pairs.size() << "\n"
      << "bijection: " << (rep.bijection_verified ? "verified" : "FAILED") << "\n"
      << "spherical (DSPS): " << yesno(rep.spherical_dsps) << "\n"
      << "factorizable: " << yesno(rep.factorizable) << "\n"
      << "modular: " << yesno(rep.modular) << "\n";
  for (const auto& w : rep.warnings) txt << "warning: " << w << "\n";
  emit(opt, classification_to_json(rep), txt.str());
  return rep.modular ? kExitOk : kExitFalse;
}

template <class F>
int cmd_ribbon_qt(const Options& opt, const QuasiTriangular<F>& qt) {
  auto qrep = verify_quasitriangular(qt);
  if (!qrep.ok())
    throw parse_error("input is not quasitriangular (" + qrep.first_failure() + ")");
  auto certs = ribbon_elements_direct(qt);
  ordered_json j;
  j["algebra"] = qt.algebra.name;
  j["provenance"] = qt.provenance;
  j["ribbon_count"] = (int)certs.size();
  ordered_json els = ordered_json::array();
  for (const auto& c : certs) els.push_back(detail::vector_to_json<F>(c.v));
  j["ribbon_elements"] = std::move(els);
  std::ostringstream txt;
  txt << "ribbon elements: " << certs.size() << "\n";
  for (const auto& c : certs) {
    txt << "  ";
    for (const auto& x : c.v) txt << x.to_string() << " ";
    txt << "\n";
  }
  emit(opt, j, txt.str());
  return certs.empty() ? kExitFalse : kExitOk;
}

template <class F>
int cmd_ribbon_algebra(const Options& opt, const HopfAlgebra<F>& h) {
  require_validated(h);
  check_ceiling(opt, h);
  auto qt = drinfeld_double(h);
  return cmd_ribbon_qt(opt, qt);
}

int cmd_ribbon(const Options& opt, const std::string& input) {
  if (!is_catalog_id(input)) {
    ordered_json j = parse_json_text(read_input_text(input));
    if (j.is_object() && j.contains("r_matrix")) {
      FieldSpec fs = field_from_json(j.at("field"));
      if (fs.kind == FieldSpec::Kind::rational)
        return cmd_ribbon_qt(opt, quasitriangular_from_json(RatField{}, j));
      return cmd_ribbon_qt(opt, quasitriangular_from_json(ZpField(fs.p), j));
    }
  }
  auto any = load_algebra(input);
  return std::visit([&](auto& h) { return cmd_ribbon_algebra(opt, h); }, any);
}

int cmd_examples(const Options& opt, const std::string& action, const std::string& id) {
  if (action == "list") {
    ordered_json j = ordered_json::array();
    std::ostringstream txt;
    for (const auto& e : catalog()) {
      ordered_json ej;
      ej["id"] = e.id;
      ej["field"] = field_to_json(e.field);
      ej["dim"] = e.dim;
      if (e.ribbon_count) ej["ribbon_count"] = *e.ribbon_count;
      if (e.spherical) ej["spherical_dsps"] = *e.spherical;
      if (e.modular) ej["modular"] = *e.modular;
      j.push_back(std::move(ej));
      txt << e.id << "\n";
    }
    if (opt.format == "json")
      std::cout << j.dump(2) << "\n";
    else
      std::cout << txt.str();
    return kExitOk;
  }
  if (action == "emit") {
    if (id.empty()) throw parse_error("examples emit: missing catalog id");
    auto any = build_catalog_entry(id);
    std::visit([&](auto& h) { std::cout << algebra_to_json(h).dump(2) << "\n"; }, any);
    return kExitOk;
  }
  throw parse_error("examples: action must be 'list' or 'emit'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations with finite-dimensional Hopf algebras: quantum doubles, "
               "integrals, and ribbon classification"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  Options opt;
  app.add_option("--format", opt.format, "output format: json or text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_flag("-v,--verbose", opt.verbosity, "progress logging on stderr");
  app.add_option("--max-dim", opt.max_dim,
                 "dimension ceiling for double construction (cost grows like dim^4)")
      ->capture_default_str();

  std::string input, examples_action, examples_id;
  auto add_input = [&input](CLI::App* sub) {
    sub->add_option("input", input, "catalog id, file path, or - for stdin")->required();
  };
  auto* sc_validate = app.add_subcommand("validate", "check all Hopf axioms with witnesses");
  add_input(sc_validate);
  auto* sc_info = app.add_subcommand("info", "basic facts about an algebra");
  add_input(sc_info);
  auto* sc_dual = app.add_subcommand("dual", "emit the dual Hopf algebra");
  add_input(sc_dual);
  auto* sc_double = app.add_subcommand("double", "construct the quantum double with R-matrix");
  add_input(sc_double);
  auto* sc_integrals = app.add_subcommand("integrals", "left integral and dual right integral");
  add_input(sc_integrals);
  auto* sc_grouplikes = app.add_subcommand("grouplikes", "enumerate grouplike elements");
  add_input(sc_grouplikes);
  auto* sc_radford = app.add_subcommand("radford", "integrals, distinguished data, fourth-power formula");
  add_input(sc_radford);
  auto* sc_ribbon = app.add_subcommand("ribbon", "certified ribbon elements of the double");
  add_input(sc_ribbon);
  auto* sc_spherical = app.add_subcommand("spherical", "sphericity verdict (predicate)");
  add_input(sc_spherical);
  auto* sc_modular = app.add_subcommand("modular", "modularity verdict for the double (predicate)");
  add_input(sc_modular);
  auto* sc_classify = app.add_subcommand("classify", "full ribbon classification report");
  add_input(sc_classify);
  auto* sc_examples = app.add_subcommand("examples", "catalog: list | emit <id>");
  sc_examples->add_option("action", examples_action, "list or emit")->required();
  sc_examples->add_option("id", examples_id, "catalog id (for emit)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (sc_examples->parsed()) return cmd_examples(opt, examples_action, examples_id);
    if (sc_ribbon->parsed()) return cmd_ribbon(opt, input);

    auto any = load_algebra(input);
    return std::visit(
        [&](auto& h) -> int {
          if (sc_validate->parsed()) return cmd_validate(opt, h);
          if (sc_info->parsed()) return cmd_info(opt, h);
          if (sc_dual->parsed()) return cmd_dual(opt, h);
          if (sc_double->parsed()) return cmd_double(opt, h);
          if (sc_integrals->parsed()) return cmd_integrals(opt, h);
          if (sc_grouplikes->parsed()) return cmd_grouplikes(opt, h);
          if (sc_radford->parsed()) return cmd_radford(opt, h);
          if (sc_spherical->parsed()) return cmd_spherical(opt, h);
          if (sc_modular->parsed()) return cmd_modular(opt, h);
          if (sc_classify->parsed()) return cmd_classify(opt, h);
          throw parse_error("no command");
        },
        any);
  } catch (const theorem_violation& e) {
    std::cerr << "theorem violation: " << e.what() << "\n";
    return kExitTheorem;
  } catch (const parse_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const structure_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const field_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  }
}
