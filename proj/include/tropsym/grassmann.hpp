#pragma once

#include <string>
#include <vector>

#include "tropsym/cluster.hpp" // Conv, IntVec
#include "tropsym/lmatrix.hpp"

namespace tropsym {

// Dimensions and coordinate bookkeeping for Gr(k,n). Active nodes are (a,b)
// with a in [n-k-1], b in [k-1], flattened as (a-1)*(k-1)+b; the active
// cluster variable at (a,b) is the Pluecker coordinate on the column set
// {1..k-b} u {k-b+a+1..k+a}.
class GrContext {
  public:
    GrContext(int k, int n);

    int k() const { return k_; }
    int n() const { return n_; }
    int d() const { return d_; }
    int m() const { return m_; }

    int node_index(int a, int b) const { return (a - 1) * (k_ - 1) + (b - 1); }
    std::pair<int, int> node_at(int idx) const { return {idx / (k_ - 1) + 1, idx % (k_ - 1) + 1}; }

    // 0-based column indices of the Pluecker coordinate at quiver node (a,b);
    // (0,0) is the leading frozen node.
    std::vector<int> pluecker_columns(int a, int b) const;

    // In-/out-neighbour Pluecker column sets of active node (a,b); the ratio
    // of the corresponding minors is the coefficient value at that node.
    const std::vector<std::vector<int>>& yhat_num(int idx) const { return num_[idx]; }
    const std::vector<std::vector<int>>& yhat_den(int idx) const { return den_[idx]; }

  private:
    int k_, n_, d_, m_;
    std::vector<std::vector<std::vector<int>>> num_, den_;
};

struct QuasiAuto {
    enum class Kind { Rho, RhoInv, Theta, Tau, TauInv, Sigma, SigmaInv };
    Kind kind;
    int i = 0; // braid index, 1 <= i <= d

    static QuasiAuto rho() { return {Kind::Rho}; }
    static QuasiAuto rho_inv() { return {Kind::RhoInv}; }
    static QuasiAuto theta() { return {Kind::Theta}; }
    static QuasiAuto tau() { return {Kind::Tau}; }
    static QuasiAuto tau_inv() { return {Kind::TauInv}; }
    static QuasiAuto sigma(int i) { return {Kind::Sigma, i}; }
    static QuasiAuto sigma_inv(int i) { return {Kind::SigmaInv, i}; }

    QuasiAuto inverse() const;
    std::string str() const;

    // +1 for rho, tau, sigma_i; -1 for theta.
    int signature() const { return kind == Kind::Theta ? -1 : 1; }
};

QuasiAuto parse_quasi_auto(const std::string& name);

// Web matrix W = (1_k | M) evaluated at chi_(a,b) = t^(v index (a,b)).
LMatrix web_matrix(const GrContext& ctx, const IntVec& v);

// Applies the matrix-level map of f to a k x n matrix over LaurentPoly.
// Braid columns are computed in the denominator-cleared form, so entries stay
// polynomial; wrapped column indices use the twisted periodicity
// z_{l+n} = (-1)^(k-1) z_l.
LMatrix apply_quasi_auto(const LMatrix& m, const QuasiAuto& f, const GrContext& ctx);

// Coefficient value of the initial labelled seed at active node idx,
// evaluated on m: a ratio of products of Pluecker minors.
std::pair<LaurentPoly, LaurentPoly> yhat_value(const LMatrix& m, const GrContext& ctx, int idx);
std::pair<LaurentPoly, LaurentPoly> yhat_value(const LMatrix& m, const GrContext& ctx, int a,
                                               int b);

// Pointwise tropicalised action of f on truncated g-vectors: builds W(t^v),
// applies the matrix map of f^{-1}, and reads deg (Max) or val (Min) data of
// every coefficient ratio.
IntVec trop_Q(const GrContext& ctx, const QuasiAuto& f, const IntVec& v, Conv conv);

// Composite f = word[0] o word[1] o ...; the inverse matrix maps are applied
// to W in word order (word[0]'s inverse first).
IntVec trop_Q_word(const GrContext& ctx, const std::vector<QuasiAuto>& word, const IntVec& v,
                   Conv conv);

} // namespace tropsym
