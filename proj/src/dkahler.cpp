#include "paracoh/dkahler.hpp"

#include <functional>
#include <map>

namespace paracoh {

std::string to_string(DKStatus s) {
  switch (s) {
    case DKStatus::witness: return "witness";
    case DKStatus::no_invariant_candidate: return "no_invariant_candidate";
    case DKStatus::generic_degenerate: return "generic_degenerate";
    case DKStatus::cohomologically_obstructed_top_square:
      return "cohomologically_obstructed_top_square";
  }
  return "?";
}

namespace {

Rational factorial(int n) {
  Rational r = Rational::one();
  for (int i = 2; i <= n; ++i) r *= Rational(i);
  return r;
}

// all exponent vectors m >= 0 with |m| = total
void enumerate_multisets(int vars, int total, std::vector<int>& cur,
                         const std::function<void(const std::vector<int>&)>& emit) {
  if (static_cast<int>(cur.size()) == vars - 1) {
    cur.push_back(total);
    emit(cur);
    cur.pop_back();
    return;
  }
  for (int e = 0; e <= total; ++e) {
    cur.push_back(e);
    enumerate_multisets(vars, total - e, cur, emit);
    cur.pop_back();
  }
}

}  // namespace

TopPowerResult generic_top_power(const std::vector<Form<Rational>>& basis, int n_half) {
  TopPowerResult out;
  if (basis.empty()) return out;
  int n = basis[0].ambient();
  if (n != 2 * n_half) throw AmbientMismatch("ambient dimension must be twice the half-dimension");
  int k = static_cast<int>(basis.size());
  IndexTuple top(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) top[static_cast<std::size_t>(i)] = i + 1;

  // coefficient of e^{1..2n} in w_{i1} ^ ... ^ w_{in} per exponent vector,
  // scaled by the multinomial coefficient
  std::map<std::vector<int>, Rational> poly;
  Rational nfact = factorial(n_half);
  std::vector<int> cur;
  std::function<void(const std::vector<int>&)> emit = [&](const std::vector<int>& m) {
    Form<Rational> acc = Form<Rational>::scalar(n, Rational::one());
    Rational denom = Rational::one();
    for (int i = 0; i < k; ++i) {
      for (int rep = 0; rep < m[static_cast<std::size_t>(i)]; ++rep) acc = acc.wedge(basis[static_cast<std::size_t>(i)]);
      denom *= factorial(m[static_cast<std::size_t>(i)]);
    }
    auto it = acc.terms().find(top);
    if (it == acc.terms().end()) return;
    poly[m] = nfact / denom * it->second;
  };
  enumerate_multisets(k, n_half, cur, emit);

  if (poly.empty()) return out;  // identically zero
  out.identically_zero = false;

  // shell-major deterministic search: values 0, 1, -1, 2, -2, ... and within
  // a shell plain odometer order (last coordinate fastest)
  std::vector<Rational> values;
  values.push_back(Rational::zero());
  for (int v = 1; v <= n_half; ++v) {
    values.push_back(Rational(v));
    values.push_back(Rational(-v));
  }
  auto eval_poly = [&](const std::vector<Rational>& x) {
    Rational total;
    for (const auto& [m, c] : poly) {
      Rational term = c;
      for (int i = 0; i < k; ++i) {
        for (int rep = 0; rep < m[static_cast<std::size_t>(i)]; ++rep) term *= x[static_cast<std::size_t>(i)];
      }
      total += term;
    }
    return total;
  };
  for (std::size_t shell = 2; shell <= values.size(); ++shell) {
    std::vector<std::size_t> digit(static_cast<std::size_t>(k), 0);
    while (true) {
      bool uses_new = false;
      for (std::size_t d : digit) uses_new = uses_new || d == shell - 1;
      if (uses_new) {
        std::vector<Rational> x(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) x[static_cast<std::size_t>(i)] = values[digit[static_cast<std::size_t>(i)]];
        if (!eval_poly(x).is_zero()) {
          Form<Rational> omega(n);
          for (int i = 0; i < k; ++i) {
            omega = omega + basis[static_cast<std::size_t>(i)].scaled(x[static_cast<std::size_t>(i)]);
          }
          out.witness = omega;
          out.witness_coefficients = x;
          return out;
        }
      }
      int pos = k - 1;
      while (pos >= 0 && digit[static_cast<std::size_t>(pos)] == shell - 1) {
        digit[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
      ++digit[static_cast<std::size_t>(pos)];
    }
  }
  throw InternalCheckError("nonzero top-power polynomial had no grid witness");
}

bool verify_dkahler_witness(const LieAlgebra& g, const ParaStructure<Rational>& ps,
                            const Form<Rational>& omega, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (!cdiff(g, omega).is_zero()) return fail("witness is not closed");
  if (!(k_action_on_form(ps, omega) == -omega)) return fail("witness is not K-anti-invariant");
  Form<Rational> power = Form<Rational>::scalar(g.dim(), Rational::one());
  for (int i = 0; i < g.dim() / 2; ++i) power = power.wedge(omega);
  if (power.is_zero()) return fail("top power vanishes");
  return true;
}

DKahlerVerdict dkahler_decide(const LieAlgebra& g, const ParaStructure<Rational>& ps) {
  if (!integrability(ps, g).integrable()) {
    throw NotIntegrable("D-Kahler existence is decided for integrable structures");
  }
  int n_half = g.dim() / 2;
  DKahlerVerdict verdict;
  Subspace<Rational> candidates = anti_invariant_closed_2forms(g, ps);
  verdict.candidate_space_dim = candidates.dim();
  if (candidates.dim() == 0) {
    verdict.status = DKStatus::no_invariant_candidate;
    verdict.obstruction_note = "no closed K-anti-invariant 2-form exists";
    return verdict;
  }
  std::vector<Form<Rational>> basis;
  for (int i = 0; i < candidates.dim(); ++i) {
    basis.push_back(Form<Rational>::from_coords(g.dim(), 2, candidates.basis_vector(i)));
  }
  TopPowerResult top = generic_top_power(basis, n_half);
  if (!top.identically_zero) {
    verdict.status = DKStatus::witness;
    verdict.witness = top.witness;
    std::string why;
    if (!verify_dkahler_witness(g, ps, *top.witness, &why)) {
      throw InternalCheckError("returned witness failed re-verification: " + why);
    }
    return verdict;
  }
  verdict.status = DKStatus::generic_degenerate;
  verdict.obstruction_note =
      "every element of the invariant candidate space has vanishing top power";
  SolvabilityFlag flag = completely_solvable_flag(g);
  bool transfer = (flag == SolvabilityFlag::nilpotent || flag == SolvabilityFlag::solvable_real_spectrum) &&
                  is_unimodular(g);
  if (transfer) {
    // class-level obstruction over the H^{2-} representative basis; with B at
    // the top degree zero (unimodular), the top coefficient is the class
    SubgroupReport<Rational> stage2 = subgroup_dims(g, ps, 2);
    TopPowerResult class_top = stage2.minus_reps.empty()
                                   ? TopPowerResult{}
                                   : generic_top_power(stage2.minus_reps, n_half);
    if (class_top.identically_zero) {
      verdict.status = DKStatus::cohomologically_obstructed_top_square;
      verdict.obstruction_note =
          "every class in H^{2-} has vanishing n-th cup power against the fundamental class; "
          "invariant candidate space is generically degenerate";
    } else {
      throw InternalCheckError("class-level top power nonzero while form-level is zero");
    }
  }
  return verdict;
}

}  // namespace paracoh
