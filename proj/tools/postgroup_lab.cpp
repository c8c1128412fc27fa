// postgroup-lab: command-line front end for the postgroup library.
//
// Exit status: 0 success, 1 verification failure, 2 bad input or usage.

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "postgroup/io.hpp"
#include "postgroup/postgroup.hpp"
#include "postgroup/selftest.hpp"

namespace {

using namespace postgroup;
using io::json;

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitInput = 2;

// Input caps for the tensor verbs.
constexpr std::uint32_t kMaxTensorDegree = 6;
constexpr std::uint32_t kMaxTensorGenerators = 4;
constexpr std::size_t kMaxMagnusOrder = 7;

// Thrown when a verb's verdict is negative after its report has been printed.
struct VerificationFailed {};

bool is_axiom_kind(ErrorKind k) {
  switch (k) {
    case ErrorKind::kLeftRegularity:
    case ErrorKind::kDiagonality:
    case ErrorKind::kGroupAxiom:
    case ErrorKind::kAutomorphism:
    case ErrorKind::kPostGroupAxiom:
    case ErrorKind::kBraidedGroup:
    case ErrorKind::kSkewBrace:
    case ErrorKind::kActionLaw:
      return true;
    default:
      return false;
  }
}

void require_order(std::size_t n, const std::string& what) {
  if (n > kMaxExhaustiveOrder)
    throw Error(ErrorKind::kSizeCap, what + " has " + std::to_string(n) + " elements; exhaustive checks are limited to " +
                                         std::to_string(kMaxExhaustiveOrder));
}

std::size_t element_count(const json& j) {
  return j.is_object() && j.contains("elements") && j["elements"].is_array() ? j["elements"].size() : 0;
}

json load(const std::string& path, const std::string& what) {
  json j = io::read_json_file(path);
  require_order(element_count(j), what);
  return j;
}

MagmaTable load_magma(const std::string& path) { return io::magma_from_json(load(path, "magma")); }
GroupTable load_group(const std::string& path) { return io::group_from_json(load(path, "group")); }
PostGroupTable load_postgroup(const std::string& path) { return io::postgroup_from_json(load(path, "post-group")); }

void emit(const json& j, const std::string& out) {
  const std::string text = j.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
  } else {
    io::write_text_file(out, text);
    std::cout << "wrote " << out << "\n";
  }
}

void print_check(const std::string& name, const std::optional<std::string>& failure, bool& ok) {
  if (failure) {
    std::cout << name << ": FAIL (" << *failure << ")\n";
    ok = false;
  } else {
    std::cout << name << ": OK\n";
  }
}

void finish(bool ok) {
  if (!ok) throw VerificationFailed{};
}

std::uint64_t effective_seed(std::uint64_t flag) {
  if (const char* env = std::getenv("POSTGROUP_LAB_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorKind::kParse, std::string("POSTGROUP_LAB_SEED is not an unsigned integer: ") + env);
    }
  }
  return flag;
}

struct Options {
  std::string magma, group, out, file, level = "quick", expression;
  std::vector<std::string> words;
  std::uint32_t degree = 0, generators = 0;
  std::size_t order = 5;
  std::uint64_t seed = 0;
  bool inverse = false;
};

// Verbs whose purpose is to judge their input report axiom failures with exit 1.
struct Verb {
  CLI::App* command;
  bool judges_input;
  std::function<void()> run;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"postgroup-lab: exact computations with post-groups, skew braces and post-Hopf algebras"};
  app.require_subcommand(1);
  Options o;
  std::vector<Verb> verbs;

  auto word_verb = [&](const std::string& name, const std::string& help, std::size_t arity,
                       std::function<ReducedWord(const MagmaTable&, const std::vector<ReducedWord>&)> f) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("--magma", o.magma, "magma file")->required();
    c->add_option("words", o.words, "words, e.g. \"x0 x1'\"")->required()->expected(static_cast<int>(arity));
    verbs.push_back({c, false, [&o, f] {
                       const MagmaTable magma = load_magma(o.magma);
                       std::vector<ReducedWord> ws;
                       for (const auto& w : o.words) ws.push_back(parse_word(magma.alphabet(), w));
                       std::cout << print(f(magma, ws)) << "\n";
                     }});
  };
  word_verb("act", "u |> v in the free post-group", 2,
            [](const MagmaTable& m, const auto& w) { return act(m, w[0], w[1]); });
  word_verb("star", "Grossman-Larson product u * v", 2,
            [](const MagmaTable& m, const auto& w) { return gl_product(m, w[0], w[1]); });
  word_verb("star-inv", "Grossman-Larson inverse of u", 1,
            [](const MagmaTable& m, const auto& w) { return gl_inverse(m, w[0]); });
  word_verb("jmap", "the isomorphism J: (F, .) -> (F, *)", 1,
            [](const MagmaTable& m, const auto& w) { return jmap(m, w[0]); });
  word_verb("kmap", "the inverse isomorphism K", 1,
            [](const MagmaTable& m, const auto& w) { return kmap(m, w[0]); });

  {
    auto* c = app.add_subcommand("validate-magma", "check that a magma is left-regular and diagonal");
    c->add_option("file", o.file, "magma file")->required();
    verbs.push_back({c, true, [&] {
                       const json j = load(o.file, "magma");
                       const MagmaReport report = io::check_magma_json(j);
                       std::cout << report.summary() << "\n";
                       finish(report.ok());
                     }});
  }
  {
    auto* c = app.add_subcommand("check-postgroup", "validate a post-group and run the braiding and brace checks");
    c->add_option("file", o.file, "post-group file")->required();
    verbs.push_back({c, true, [&] {
                       const PostGroupTable pg = load_postgroup(o.file);
                       std::cout << "post-group with " << pg.size() << " elements"
                                 << (is_pregroup(pg) ? " (pre-group)" : "") << "\n";
                       bool ok = true;
                       for (const auto& check : selftest::postgroup_checks(pg)) print_check(check.name, check.failure, ok);
                       finish(ok);
                     }});
  }
  {
    auto* c = app.add_subcommand("braiding", "braided group (G, *, sigma) of a post-group");
    c->add_option("file", o.file, "post-group file")->required();
    c->add_option("--out", o.out, "output file");
    verbs.push_back({c, false, [&] {
                       const PostGroupTable pg = load_postgroup(o.file);
                       emit(io::to_json(gl_group(pg), braiding(pg)), o.out);
                     }});
  }
  {
    auto* c = app.add_subcommand("ybe", "check a braided group and the braid and Yang-Baxter equations");
    c->add_option("file", o.file, "braided group file")->required();
    verbs.push_back({c, true, [&] {
                       const auto doc = io::braided_from_json(load(o.file, "braided group"));
                       bool ok = true;
                       print_check("braided group", braided_group_violation(doc.star, doc.sigma), ok);
                       std::optional<std::string> braid, ybe;
                       if (auto w = braid_equation_witness(doc.sigma)) braid = "fails at " + triple_names(doc.sigma.names, *w);
                       if (auto w = ybe_witness(doc.sigma)) ybe = "fails at " + triple_names(doc.sigma.names, *w);
                       print_check("braid equation", braid, ok);
                       print_check("Yang-Baxter equation", ybe, ok);
                       finish(ok);
                     }});
  }
  {
    auto* c = app.add_subcommand("to-brace", "skew brace (G, ., *) of a post-group");
    c->add_option("file", o.file, "post-group file")->required();
    c->add_option("--out", o.out, "output file");
    verbs.push_back({c, false, [&] { emit(io::to_json(to_skew_brace(load_postgroup(o.file))), o.out); }});
  }
  {
    auto* c = app.add_subcommand("from-brace", "post-group of a skew brace");
    c->add_option("file", o.file, "skew brace file")->required();
    c->add_option("--out", o.out, "output file");
    verbs.push_back({c, false, [&] {
                       emit(io::to_json(skew_brace_to_postgroup(io::skew_brace_from_json(load(o.file, "skew brace")))),
                            o.out);
                     }});
  }
  {
    auto* c = app.add_subcommand("opposite", "opposite post-group");
    c->add_option("file", o.file, "post-group file")->required();
    c->add_option("--out", o.out, "output file");
    verbs.push_back({c, false, [&] { emit(io::to_json(opposite(load_postgroup(o.file))), o.out); }});
  }
  {
    auto* c = app.add_subcommand("make-trivial", "trivial post-group a |> b = b on a group");
    c->add_option("--group", o.group, "group file")->required();
    c->add_option("--out", o.out, "output file");
    verbs.push_back({c, false, [&] { emit(io::to_json(make_trivial(load_group(o.group))), o.out); }});
  }
  {
    auto* c = app.add_subcommand("make-conjugation", "conjugation post-group on a group");
    c->add_option("--group", o.group, "group file")->required();
    c->add_option("--out", o.out, "output file");
    verbs.push_back({c, false, [&] { emit(io::to_json(make_conjugation(load_group(o.group))), o.out); }});
  }
  {
    auto* c = app.add_subcommand("from-action", "gauge post-group of maps M -> G from a right action");
    c->add_option("file", o.file, "action file")->required();
    c->add_option("--out", o.out, "output file");
    verbs.push_back({c, false, [&] {
                       const json j = io::read_json_file(o.file);
                       if (j.is_object() && j.contains("group")) require_order(element_count(j["group"]), "group");
                       if (j.is_object() && j.contains("set") && j["set"].is_array())
                         require_order(j["set"].size(), "point set");
                       const RightAction action = io::action_from_json(j);
                       if (gauge_count(action, kMaxExhaustiveOrder) > kMaxExhaustiveOrder)
                         require_order(kMaxExhaustiveOrder + 1, "gauge group");
                       emit(io::to_json(build_gauge_postgroup(action)), o.out);
                     }});
  }
  {
    auto* c = app.add_subcommand("kmap-tensor", "Gavrilov K-map on basis words of T(M) or on an expression");
    c->add_option("--generators", o.generators, "number of generators x1..xn")->default_val(2);
    c->add_option("--degree", o.degree, "leaf degree of the basis words")->required();
    c->add_flag("--inverse", o.inverse, "apply K^-1 instead of K");
    c->add_option("expression", o.expression, "optional element, e.g. \"x1.x2 - (x1>x2)\"");
    verbs.push_back({c, false, [&] {
                       if (o.generators < 1 || o.generators > kMaxTensorGenerators)
                         throw Error(ErrorKind::kSizeCap, "--generators must be in 1.." + std::to_string(kMaxTensorGenerators));
                       if (o.degree > kMaxTensorDegree)
                         throw Error(ErrorKind::kSizeCap, "--degree is limited to " + std::to_string(kMaxTensorDegree));
                       const auto names = tensor_generator_names(o.generators);
                       const auto f = o.inverse ? kmap_tensor_inverse : kmap_tensor;
                       const std::string label = o.inverse ? "K^-1" : "K";
                       if (!o.expression.empty()) {
                         const TensorPoly a = parse_tensor(o.expression, names);
                         for (const auto& [w, c] : a)
                           if (w.degree() > o.degree)
                             throw Error(ErrorKind::kSizeCap, "expression has a term above --degree");
                         std::cout << to_text(f(a), names) << "\n";
                         return;
                       }
                       for (const auto& w : words_of_degree(o.generators, o.degree))
                         std::cout << label << "(" << to_text(w, names) << ") = " << to_text(f(TensorPoly(w)), names)
                                   << "\n";
                     }});
  }
  {
    auto* c = app.add_subcommand("check-posthopf", "post-Hopf, post-Lie and K-map identities on all basis elements");
    c->add_option("--degree", o.degree, "maximal total leaf degree")->required();
    c->add_option("--generators", o.generators, "number of generators")->default_val(2);
    verbs.push_back({c, true, [&] {
                       if (o.generators < 1 || o.generators > kMaxTensorGenerators)
                         throw Error(ErrorKind::kSizeCap, "--generators must be in 1.." + std::to_string(kMaxTensorGenerators));
                       if (o.degree > kMaxTensorDegree)
                         throw Error(ErrorKind::kSizeCap, "--degree is limited to " + std::to_string(kMaxTensorDegree));
                       bool ok = true;
                       for (const auto& r : {selftest::posthopf_postlie(o.generators, o.degree),
                                             selftest::k_hopf_isomorphism(o.generators, o.degree)}) {
                         std::optional<std::string> failure;
                         if (!r.identities_hold) failure = r.detail;
                         print_check(r.title, failure, ok);
                         if (r.identities_hold) std::cout << "  " << r.detail << "\n";
                       }
                       finish(ok);
                     }});
  }
  {
    auto* c = app.add_subcommand("magnus", "flow, alpha and Grossman-Larson Magnus series with exact checks");
    c->add_option("--order", o.order, "truncation order N")->default_val(5);
    c->add_option("--generators", o.generators, "number of generators (only 1 is supported)")->default_val(1);
    verbs.push_back({c, true, [&] {
                       if (o.generators != 1) throw Error(ErrorKind::kInvalidArgument, "magnus supports --generators 1 only");
                       if (o.order < 1 || o.order > kMaxMagnusOrder)
                         throw Error(ErrorKind::kSizeCap, "--order must be in 1.." + std::to_string(kMaxMagnusOrder));
                       const auto names = tensor_generator_names(1);
                       const MagmaTree x = MagmaTree::leaf(0);
                       const TruncatedSeries alpha = alpha_series(x, o.order);
                       const TruncatedSeries flow = solve_right_flow(alpha);
                       const TruncatedSeries omega = magnus_gl(alpha);
                       for (const auto& [label, series] :
                            {std::pair{"alpha", &alpha}, std::pair{"Y", &flow}, std::pair{"Omega*", &omega}})
                         for (std::size_t k = 0; k <= o.order; ++k)
                           std::cout << label << "[" << k << "] = " << to_text((*series)[k], names) << "\n";
                       auto at = [](const OrderReport& r) -> std::optional<std::string> {
                         if (r.ok()) return std::nullopt;
                         return "first mismatch at t^" + std::to_string(*r.first_failure);
                       };
                       bool ok = true;
                       print_check("alpha' = -alpha |> alpha", at(check_alpha_ode(alpha)), ok);
                       OrderReport flow_report;
                       const TruncatedSeries k_exp = coefficientwise(exp_dot_series(x, o.order), kmap_tensor);
                       for (std::size_t k = 0; k <= o.order && flow_report.ok(); ++k)
                         if (flow[k] != k_exp[k]) flow_report.first_failure = k;
                       print_check("Y = K(exp(tx))", at(flow_report), ok);
                       print_check("log Y is primitive", at(check_primitivity_of_log(flow)), ok);
                       print_check("exp*(Omega*) = exp(tx)", at(check_magnus_gl(x, o.order)), ok);
                       finish(ok);
                     }});
  }
  {
    auto* c = app.add_subcommand("selftest", "run the acceptance suite");
    c->add_option("--seed", o.seed, "random seed (POSTGROUP_LAB_SEED overrides)")->default_val(0);
    c->add_option("--level", o.level, "quick or full")->check(CLI::IsMember({"quick", "full"}))->default_val("quick");
    verbs.push_back({c, true, [&] {
                       selftest::Config cfg;
                       cfg.seed = effective_seed(o.seed);
                       cfg.level = o.level == "full" ? selftest::Level::kFull : selftest::Level::kQuick;
                       std::cout << "seed " << cfg.seed << ", level " << o.level << "\n";
                       bool ok = true;
                       for (const auto& r : selftest::run_all(cfg)) {
                         std::cout << r.line() << "\n";
                         ok = ok && r.passed();
                       }
                       finish(ok);
                     }});
  }

  if (argc > 1 && argv[1][0] != '-') {
    bool known = false;
    for (const auto& verb : verbs) known = known || verb.command->get_name() == argv[1];
    if (!known) {
      std::cerr << "unknown subcommand '" << argv[1] << "'\n" << app.help();
      return kExitInput;
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kExitInput;
  }

  for (const auto& verb : verbs) {
    if (!verb.command->parsed()) continue;
    try {
      verb.run();
      return kExitOk;
    } catch (const VerificationFailed&) {
      return kExitVerification;
    } catch (const Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return verb.judges_input && is_axiom_kind(e.kind()) ? kExitVerification : kExitInput;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitInput;
    }
  }
  return kExitInput;
}
