#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <stdexcept>

#include "glmn/characters.hpp"
#include "glmn/superalg.hpp"
#include "glmn/theorems.hpp"
#include "glmn/weights.hpp"

namespace glmn::cli {

namespace {

using Json = nlohmann::ordered_json;

/// Raised for malformed requests; maps to exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Request {
  int m = 0;
  int n = 0;
  std::uint32_t characteristic = 0;
  std::string lambda;
  std::string partition;
  std::string kind = "induced";
  std::string target;
  std::string even_verdict;
  std::string out_path;
  int i = 0;
  int l = 0;
  std::int64_t guard = 4096;
  bool expect_irreducible = false;
};

void check_characteristic(std::uint32_t p) {
  if (p == 2) throw InputError("characteristic 2 is excluded: the ground field must have characteristic different from 2");
  if (!is_supported_characteristic(p)) throw InputError("characteristic must be 0 or an odd prime, got " + std::to_string(p));
}

void check_shape(const Request& r) {
  if (r.m < 1 || r.n < 1) throw InputError("--m and --n must be positive");
}

Weight weight_of(const Request& r) {
  if (r.lambda.empty()) throw InputError("--lambda is required");
  Weight w;
  try {
    w = parse_weight(r.lambda, r.m, r.n);
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
  if (!w.is_dominant()) throw InputError("weight " + r.lambda + " is not dominant; H0(lambda) is nonzero only for dominant lambda");
  return w;
}

Partition partition_of(const Request& r) {
  if (!r.partition.empty()) {
    try {
      return parse_partition(r.partition);
    } catch (const std::exception& e) {
      throw InputError(e.what());
    }
  }
  if (!r.lambda.empty()) return weight_to_hook(weight_of(r));
  throw InputError("--partition or --lambda is required");
}

Json header(const std::string& command, const Request& r) {
  Json j;
  j["command"] = command;
  j["m"] = r.m;
  j["n"] = r.n;
  return j;
}

Json omega_json(const TypicalityReport& t) {
  Json rows = Json::array();
  for (const auto& row : t.omega_matrix) rows.push_back(row);
  return rows;
}

Json positions_json(const TypicalityReport& t) {
  Json a = Json::array();
  for (const auto& [i, j] : t.atypical_positions) a.push_back({i, j});
  return a;
}

Json verdict_json(Verdict v) {
  if (v == Verdict::Indeterminate) return "indeterminate";
  return v == Verdict::Irreducible;
}

// ---------------------------------------------------------------------------

int cmd_typical(const Request& r, Json& j) {
  check_characteristic(r.characteristic);
  auto w = weight_of(r);
  auto t = is_typical(w, r.characteristic);
  j = header("typical", r);
  j["characteristic"] = r.characteristic;
  j["lambda"] = format_weight(w);
  j["omega"] = omega_json(t);
  j["atypical_positions"] = positions_json(t);
  j["typical"] = t.typical;
  return 0;
}

int cmd_decide(const Request& r, Json& j) {
  check_characteristic(r.characteristic);
  auto w = weight_of(r);
  std::optional<bool> even;
  if (r.even_verdict == "irreducible") even = true;
  else if (r.even_verdict == "reducible") even = false;
  else if (!r.even_verdict.empty() && r.even_verdict != "unavailable")
    throw InputError("--even-verdict must be irreducible, reducible or unavailable");
  if (r.characteristic != 0 && r.even_verdict.empty())
    throw InputError("--even-verdict is required in positive characteristic (irreducible|reducible|unavailable)");
  if (r.characteristic == 0 && even.has_value() && !*even)
    throw InputError("in characteristic 0 the even part is always irreducible");

  auto v = decide_irreducible(w, r.characteristic, even);
  auto c = corollary_verdicts(w, r.characteristic, even);
  auto t = is_typical(w, r.characteristic);
  j = header("decide", r);
  j["characteristic"] = r.characteristic;
  j["lambda"] = format_weight(w);
  j["omega"] = omega_json(t);
  j["typical"] = v.typical;
  j["even_part"] = to_string(v.even_part);
  j["induced_irreducible"] = verdict_json(v.induced);
  j["weyl_irreducible"] = verdict_json(c.weyl);
  j["kac_irreducible"] = verdict_json(c.kac);
  j["rationale"] = v.rationale;
  return r.expect_irreducible && v.induced == Verdict::Reducible ? 1 : 0;
}

int cmd_character(const Request& r, Json& j) {
  j = header("character", r);
  j["kind"] = r.kind;
  LaurentPoly ch;
  if (r.kind == "induced") {
    auto w = weight_of(r);
    j["lambda"] = format_weight(w);
    ch = char_induced(w);
  } else if (r.kind == "hook") {
    auto p = partition_of(r);
    if (!is_hook(p, r.m, r.n)) throw InputError("partition " + format_partition(p) + " is not an (m|n)-hook partition");
    j["partition"] = format_partition(p);
    ch = hook_schur(p, r.m, r.n);
  } else {
    throw InputError("--kind must be induced or hook");
  }
  j["character"] = render(ch);
  j["terms"] = ch.terms().size();
  j["value_at_ones"] = ch.at_ones();
  return 0;
}

int cmd_hookschur(const Request& r, Json& j) {
  auto p = partition_of(r);
  if (!is_hook(p, r.m, r.n)) throw InputError("partition " + format_partition(p) + " is not an (m|n)-hook partition");
  auto hs = hook_schur(p, r.m, r.n);
  j = header("hookschur", r);
  j["partition"] = format_partition(p);
  j["hook_schur"] = render(hs);
  j["value_at_ones"] = hs.at_ones();
  return 0;
}

int cmd_factorcheck(const Request& r, Json& j) {
  auto p = partition_of(r);
  if (!is_hook(p, r.m, r.n)) throw InputError("partition " + format_partition(p) + " is not an (m|n)-hook partition");
  auto shape = normalize_partition(p);
  if (static_cast<int>(shape.size()) < r.m || shape[r.m - 1] < r.n)
    throw InputError("the factorization formula requires lambda_m >= n");
  auto hs = hook_schur(shape, r.m, r.n);
  auto prod = factorization_product(shape, r.m, r.n);
  auto w = hook_to_weight(shape, r.m, r.n);
  j = header("factorcheck", r);
  j["partition"] = format_partition(shape);
  j["lambda"] = format_weight(w);
  j["hook_schur"] = render(hs);
  j["product"] = render(prod);
  j["character_induced"] = render(char_induced(w));
  j["equal"] = hs == prod;
  j["induced_equals_hook"] = char_induced(w) == hs;
  return hs == prod ? 0 : 1;
}

int cmd_dim(const Request& r, Json& j) {
  auto w = weight_of(r);
  j = header("dim", r);
  j["lambda"] = format_weight(w);
  j["dim_even"] = dim_even(w);
  j["dim_induced"] = dim_induced(w);
  j["character_at_ones"] = char_induced(w).at_ones();
  return 0;
}

int cmd_normalize(const Request& r, Json& j) {
  auto w = weight_of(r);
  auto nrm = berezin_normalize(w);
  j = header("normalize", r);
  j["lambda"] = format_weight(w);
  j["normalized"] = format_weight(nrm.weight);
  j["twist"] = nrm.twist;
  return 0;
}

int cmd_kappa(const Request& r, Json& j) {
  auto w = weight_of(r);
  j = header("kappa", r);
  j["lambda"] = format_weight(w);
  j["kappa"] = format_weight(kappa_weight(w));
  return 0;
}

int cmd_verify(const Request& r, Json& j) {
  check_characteristic(r.characteristic);
  check_shape(r);
  const auto& targets = verification_targets();
  if (std::find(targets.begin(), targets.end(), r.target) == targets.end())
    throw InputError("unknown --target '" + r.target + "'");
  std::optional<Weight> w;
  if (!r.lambda.empty()) w = weight_of(r);
  if (target_needs_weight(r.target) && !w) throw InputError("target " + r.target + " requires --lambda");

  VerificationReport rep;
  std::optional<TopDerivativeStatus> status;
  if (r.target == "lemma10") {
    rep = verify_lemma10(*w, r.characteristic, r.i, r.l);
  } else if (r.target == "prop12") {
    auto res = verify_prop12_detailed(*w, r.characteristic);
    rep = res.report;
    status = res.status;
  } else {
    rep = verify_target(r.target, r.m, r.n, r.characteristic, w);
  }

  j = header("verify", r);
  j["target"] = rep.target;
  j["characteristic"] = rep.characteristic;
  j["lambda"] = rep.lambda ? Json(format_weight(*rep.lambda)) : Json(nullptr);
  j["instances_checked"] = rep.instances_checked;
  Json failures = Json::array();
  for (const auto& f : rep.failures) failures.push_back({{"instance", f.instance}, {"lhs", f.lhs}, {"rhs", f.rhs}});
  j["failures"] = failures;
  j["notes"] = rep.notes;
  if (status) {
    j["top_derivative"] = {{"predicted_zero", status->predicted_zero},
                           {"lhs_zero", status->lhs_zero},
                           {"vy_nonzero", status->vy_nonzero}};
  }
  j["passed"] = rep.passed();
  return rep.passed() ? 0 : 1;
}

int cmd_oracle(const Request& r, Json& j) {
  check_characteristic(r.characteristic);
  if (r.characteristic != 0)
    throw InputError("the closure oracle runs in characteristic 0 only (divided powers are out of scope)");
  auto w = weight_of(r);
  auto res = closure_oracle(w, r.guard, 0);
  j = header("oracle", r);
  j["lambda"] = format_weight(w);
  j["normalized"] = format_weight(res.normalized);
  j["dim_closure"] = res.dim_closure;
  j["dim_induced"] = res.dim_induced;
  j["irreducible"] = res.irreducible;
  j["kappa"] = format_weight(kappa_weight(res.normalized));
  j["kappa_dim"] = res.kappa_dim;
  Json spaces = Json::array();
  for (const auto& [wt, d] : res.weight_dims) spaces.push_back({{"weight", wt}, {"dim", d}});
  j["weight_spaces"] = spaces;
  return r.expect_irreducible && !res.irreducible ? 1 : 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Irreducibility of induced GL(m|n)-modules: exact checks and decisions", "glmn"};
  app.require_subcommand(1);
  Request r;

  auto shape = [&](CLI::App* sub) {
    sub->add_option("--m", r.m, "size of the even block")->required()->check(CLI::Range(1, kMaxOrder));
    sub->add_option("--n", r.n, "size of the odd block")->required()->check(CLI::Range(1, kMaxOrder));
    sub->add_option("--out", r.out_path, "write JSON to this file instead of stdout");
  };
  auto with_char = [&](CLI::App* sub) { sub->add_option("--char", r.characteristic, "0 or an odd prime"); };
  auto with_lambda = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--lambda", r.lambda, "weight \"a1,..,am|b1,..,bn\"");
    if (required) opt->required();
  };

  auto* typical = app.add_subcommand("typical", "omega matrix and typicality");
  shape(typical), with_char(typical), with_lambda(typical, true);

  auto* decide = app.add_subcommand("decide", "irreducibility verdict for H0(lambda)");
  shape(decide), with_char(decide), with_lambda(decide, true);
  decide->add_option("--even-verdict", r.even_verdict, "irreducible|reducible|unavailable");
  decide->add_flag("--expect-irreducible", r.expect_irreducible, "exit 1 when the verdict is reducible");

  auto* character = app.add_subcommand("character", "formal characters");
  shape(character), with_lambda(character, false);
  character->add_option("--kind", r.kind, "induced|hook");
  character->add_option("--partition", r.partition, "hook partition \"l1,l2,...\"");

  auto* hookschur = app.add_subcommand("hookschur", "hook Schur function");
  shape(hookschur), with_lambda(hookschur, false);
  hookschur->add_option("--partition", r.partition, "hook partition");

  auto* factorcheck = app.add_subcommand("factorcheck", "hook Schur factorization for lambda_m >= n");
  shape(factorcheck), with_lambda(factorcheck, false);
  factorcheck->add_option("--partition", r.partition, "hook partition");

  auto* dim = app.add_subcommand("dim", "dimensions of H0(lambda) and its even part");
  shape(dim), with_lambda(dim, true);

  auto* normalize = app.add_subcommand("normalize", "Berezinian twist to lambda-_n = 0");
  shape(normalize), with_lambda(normalize, true);

  auto* verify = app.add_subcommand("verify", "check an identity on all instances");
  shape(verify), with_char(verify), with_lambda(verify, false);
  verify->add_option("--target", r.target, "identity to check")->required();
  verify->add_option("--i", r.i, "row index (lemma10)");
  verify->add_option("--l", r.l, "column index (lemma10)");

  auto* oracle = app.add_subcommand("oracle", "span of v under all e_kl (characteristic 0)");
  shape(oracle), with_char(oracle), with_lambda(oracle, true);
  oracle->add_option("--guard", r.guard, "largest dim H0 attempted");
  oracle->add_flag("--expect-irreducible", r.expect_irreducible, "exit 1 when the closure is proper");

  auto* kappa = app.add_subcommand("kappa", "the weight lambda + (-n..|m..)");
  shape(kappa), with_lambda(kappa, true);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  Json j;
  int code = 0;
  try {
    auto* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "typical") code = cmd_typical(r, j);
    else if (name == "decide") code = cmd_decide(r, j);
    else if (name == "character") code = cmd_character(r, j);
    else if (name == "hookschur") code = cmd_hookschur(r, j);
    else if (name == "factorcheck") code = cmd_factorcheck(r, j);
    else if (name == "dim") code = cmd_dim(r, j);
    else if (name == "normalize") code = cmd_normalize(r, j);
    else if (name == "verify") code = cmd_verify(r, j);
    else if (name == "oracle") code = cmd_oracle(r, j);
    else code = cmd_kappa(r, j);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  const std::string text = j.dump(2) + "\n";
  if (r.out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(r.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << r.out_path << "\n";
      return 2;
    }
    file << text;
  }
  return code;
}

}  // namespace glmn::cli
