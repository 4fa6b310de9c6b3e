#include "nct/verify/report.hpp"

#include "nct/modular/special.hpp"
#include "nct/verify/checks.hpp"

#include <map>

namespace nct::verify {

nlohmann::json to_json(const CheckRecord& r) {
  return {{"check", r.check}, {"anchor", r.anchor}, {"dim", r.dim},         {"seed", r.seed},
          {"error", r.error}, {"threshold", r.threshold}, {"pass", r.pass}};
}

namespace {

std::uint64_t sub_seed(std::uint64_t seed, unsigned tag) { return seed * 16 + tag; }

modular::ModularFunctionExpr byparts_function(int i) {
  switch (i % 5) {
    case 0:
      return modular::ModularFunctionExpr::modified_log(2);
    case 1:
      return modular::ModularFunctionExpr::modified_log(1);
    case 2:
      return modular::ModularFunctionExpr::modified_log(3);
    case 3:
      return modular::f_expression();
    default:
      return modular::ModularFunctionExpr::delta_power(1);
  }
}

}  // namespace

std::vector<CheckRecord> run_checks(const VerifyConfig& cfg) {
  if (cfg.dims.empty()) throw Error("verify: no dimensions configured");
  std::vector<CheckRecord> out;
  const double s = cfg.tolerance_scale;
  auto add = [&](std::string name, std::string anchor, int d, std::uint64_t seed, double err, double thr) {
    out.push_back({std::move(name), std::move(anchor), d, seed, err, thr * s, err < thr * s});
  };
  for (int i = 0; i < cfg.seeds; ++i) {
    const int d = cfg.dims[static_cast<std::size_t>(i) % cfg.dims.size()];
    const std::uint64_t seed = cfg.base_seed + static_cast<std::uint64_t>(i);
    const auto inst = MatrixAlgebraInstance::random(d, seed);

    const Matrix rho = random_matrix(d, d, sub_seed(seed, 1));
    for (int m = 1; m <= 3; ++m) {
      add("move_lemma_m" + std::to_string(m), "resolvent-weighted u-integral around rho equals L_m(Delta)(rho)", d,
          seed, check_move_lemma(inst, rho, m), threshold::move_lemma);
    }

    const Matrix a = random_matrix(d, d, sub_seed(seed, 2));
    const Matrix b = random_matrix(d, d, sub_seed(seed, 3));
    const auto f = byparts_function(i);
    add("byparts", "tau(a F(log Delta)(b)) = tau(F(-log Delta)(a) b), F = " + f.to_string(), d, seed,
        check_byparts(inst, a, b, f), threshold::byparts);

    add("trace_vanish", "tau(K(log Delta)(x) x) = 0 for odd K", d, seed,
        check_trace_vanish(inst, random_matrix(d, d, sub_seed(seed, 4))), threshold::trace_vanish);

    const Matrix psi = random_hermitian(d, sub_seed(seed, 5), 0.5);
    const Matrix c = random_matrix(d, d, sub_seed(seed, 6));
    const FrechetErrors fe = check_frechet_identities(psi, c);
    add("frechet_left", "k^-1 d(k) = 2(Delta^(1/2) - 1)/log Delta (d log k)", d, seed, fe.left, threshold::frechet);
    add("frechet_right", "d(k) k^-1 = -2(Delta^(-1/2) - 1)/log Delta (d log k)", d, seed, fe.right, threshold::frechet);
    add("modular_half", "k c k = k^2 Delta^(1/2)(c)", d, seed, fe.half_power, threshold::modular_rewrite);
    add("modular_full", "c k^2 = k^2 Delta(c)", d, seed, fe.full_power, threshold::modular_rewrite);
    add("f_K_consistency", "phi(f(Delta)(d k) d k) = tau(K(log Delta)(d log k) d log k)", d, seed,
        check_f_K_consistency(psi, c), threshold::f_K_consistency);
  }
  return out;
}

std::vector<CheckSummary> summarize(const std::vector<CheckRecord>& records) {
  std::vector<CheckSummary> out;
  std::map<std::string, std::size_t> index;
  for (const CheckRecord& r : records) {
    auto [it, inserted] = index.try_emplace(r.check, out.size());
    if (inserted) out.push_back({r.check, r.anchor, 0, 0, 0, r.threshold});
    CheckSummary& s = out[it->second];
    ++s.count;
    if (!r.pass) ++s.failures;
    s.worst_error = std::max(s.worst_error, r.error);
    s.threshold = std::max(s.threshold, r.threshold);
  }
  return out;
}

}  // namespace nct::verify
