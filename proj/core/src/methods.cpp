#include "igm/methods.hpp"

#include <algorithm>
#include <cstdio>

#include "igm/design_gram.hpp"
#include "igm/error.hpp"
#include "igm/linalg.hpp"

namespace igm {

std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::Pigm: return "PIGM";
    case Method::Nigm: return "NIGM";
    case Method::Ligm: return "LIGM";
    case Method::Blankmeyer: return "Blankmeyer";
  }
  return "?";
}

std::string_view to_string(Diagnostic d) noexcept {
  switch (d) {
    case Diagnostic::NonPositiveWeight: return "NonPositiveWeight";
    case Diagnostic::IllConditioned: return "IllConditioned";
  }
  return "?";
}

double MethodResult::kkt_multiplier() const {
  if (method != Method::Ligm || !multiplier()) {
    throw Error(ErrorCode::InvalidArgument, "only LIGM results carry a multiplier");
  }
  return *multiplier() + shift;
}

std::string MethodResult::label() const {
  if (method == Method::Nigm || method == Method::Ligm) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%s(%.6g)", to_string(method).data(), shift);
    return buf;
  }
  return std::string(to_string(method));
}

bool MethodResult::has(Diagnostic d) const {
  return std::find(diagnostics.begin(), diagnostics.end(), d) != diagnostics.end();
}

namespace {

// Normalized G^-1 e from one factorization.
MethodResult normalized_inverse_row_sums(const LUFactors& lu, Method method, double shift) {
  const std::vector<double> e(lu.order(), 1.0);
  auto v = lu_solve(lu, e);
  MethodResult res{PriorityVector::normalize(std::move(v)), method, shift, {}, lu.min_pivot_ratio};
  return res;
}

void attach_diagnostics(MethodResult& res) {
  const auto w = res.weights.weights();
  if (std::any_of(w.begin(), w.end(), [](double x) { return x <= 0.0; })) {
    res.diagnostics.push_back(Diagnostic::NonPositiveWeight);
  }
  if (res.min_pivot_ratio < kIllConditionedPivotRatio) {
    res.diagnostics.push_back(Diagnostic::IllConditioned);
  }
}

}  // namespace

MethodResult pigm(const PairwiseReciprocalMatrix& prm) {
  const auto g = gram_elementwise(prm);
  auto res = normalized_inverse_row_sums(lu_factor(g.entries()), Method::Pigm, 1.0);
  attach_diagnostics(res);
  return res;
}

MethodResult nigm(const PairwiseReciprocalMatrix& prm, double r) {
  LUFactors lu;
  if (r == 0.0) {
    try {
      lu = lu_factor(reduced_gram(prm).entries());
    } catch (const Error& e) {
      if (e.code() != ErrorCode::SingularMatrix) throw;
      throw Error(ErrorCode::ZeroShiftOnConsistent,
                  "r = 0 needs an invertible reduced Gram matrix, but it is singular "
                  "(the comparison matrix is perfectly consistent); use a nonzero r");
    }
  } else {
    lu = lu_factor(shifted_gram(prm, r).entries());
  }
  auto res = normalized_inverse_row_sums(lu, Method::Nigm, r);
  attach_diagnostics(res);
  return res;
}

MethodResult ligm(const PairwiseReciprocalMatrix& prm, double r_tilde) {
  const std::size_t n = prm.order();
  const auto g = lagrangian_gram(prm, r_tilde);
  const auto lu = lu_factor(g.entries());
  std::vector<double> rhs(n + 1, 0.0);
  rhs[n] = 1.0;
  auto x = lu_solve(lu, rhs);
  const double lambda = x[n];
  x.pop_back();
  MethodResult res{PriorityVector(std::move(x), lambda), Method::Ligm, r_tilde, {},
                   lu.min_pivot_ratio};
  attach_diagnostics(res);
  return res;
}

MethodResult blankmeyer(const PairwiseReciprocalMatrix& prm) {
  LUFactors lu;
  try {
    lu = lu_factor(reduced_gram(prm).entries());
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SingularMatrix) throw;
    throw Error(ErrorCode::SingularMatrix,
                "reduced Gram matrix C is singular because the comparison matrix is perfectly "
                "consistent; the legacy closed form cannot be evaluated (use PIGM, NIGM with "
                "r != 0, or LIGM)");
  }
  auto res = normalized_inverse_row_sums(lu, Method::Blankmeyer, 0.0);
  attach_diagnostics(res);
  return res;
}

}  // namespace igm
