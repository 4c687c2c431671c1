#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tropsym/cluster.hpp" // IntVec
#include "tropsym/errors.hpp"

namespace tropsym {

// Rectangular semistandard Young tableau with k rows and entries in [n],
// stored column-wise. Columns are strictly increasing and kept sorted so the
// rectangular reading has weakly increasing rows. The empty tableau is valid.
class Tableau {
  public:
    Tableau() : k_(0), n_(0) {}
    Tableau(int k, int n) : k_(k), n_(n) {}
    Tableau(int k, int n, const std::vector<std::vector<int>>& cols);

    // Assemble from row multisets (each row sorted internally); throws
    // NotSemistandardizable if the rows cannot be cut into strict columns.
    static Tableau from_rows(int k, int n, std::vector<std::vector<int>> rows);

    int k() const { return k_; }
    int n() const { return n_; }
    int num_cols() const { return static_cast<int>(cols_.size()); }
    bool empty() const { return cols_.empty(); }
    const std::vector<std::vector<int>>& cols() const { return cols_; }
    std::vector<std::vector<int>> rows() const;

    bool operator==(const Tableau& o) const {
        return k_ == o.k_ && n_ == o.n_ && cols_ == o.cols_;
    }
    bool operator!=(const Tableau& o) const { return !(*this == o); }
    bool operator<(const Tableau& o) const { return cols_ < o.cols_; }

    std::string str() const;

  private:
    int k_, n_;
    std::vector<std::vector<int>> cols_;
};

// Row-wise multiset union, re-sorted into semistandard rectangular form.
Tableau tableau_union(const Tableau& s, const Tableau& t);

// Row-wise multiset difference t / s; s must be a factor of t.
Tableau tableau_quotient(const Tableau& t, const Tableau& s);

// Removes the maximal trivial factor (linear interval columns {a+1..a+k});
// the reduced representative of the equivalence class.
Tableau reduce(const Tableau& t);

// Removes all frozen factors. Frozen columns are the cyclic intervals
// {i, i+1, ..., i+k-1} taken mod n, which includes the wrapped ones.
Tableau strip_frozen_factors(const Tableau& t);

bool has_frozen_factor(const Tableau& t);

// Exponent map (i, s) -> integer over the Y(i, s) lattice. Laurent monomials
// (negative exponents) appear in intermediate states; dominant means all
// exponents nonnegative.
struct DominantMonomial {
    std::map<std::pair<int, int>, long long> exps;

    bool dominant() const {
        for (const auto& [ys, e] : exps)
            if (e < 0) return false;
        return true;
    }
    bool empty() const { return exps.empty(); }
    void mul(int i, int s, long long e) {
        if (e == 0) return;
        auto it = exps.emplace(std::make_pair(i, s), 0).first;
        it->second += e;
        if (it->second == 0) exps.erase(it);
    }
    void mul(const DominantMonomial& o, long long power = 1) {
        for (const auto& [ys, e] : o.exps) mul(ys.first, ys.second, e * power);
    }
    bool operator==(const DominantMonomial& o) const { return exps == o.exps; }
    std::string str() const;
};

// Fundamental one-column tableau attached to Y(i, s).
std::vector<int> fundamental_column(int k, int i, int s);

// Monomial of one strictly increasing column via its entry gaps.
DominantMonomial column_monomial(int k, const std::vector<int>& col);

// Monomial of a full tableau; multiplicative over columns, trivial columns
// contribute nothing, and constant on the trivial-factor equivalence class.
DominantMonomial tableau_to_monomial(const Tableau& t);

// Dominant monomial -> union of fundamental columns (no frozen stripping).
Tableau monomial_to_tableau(int k, int n, const DominantMonomial& m);

// The unique small-gap representative of the class of t.
Tableau small_gap_form(const Tableau& t);

// Monomial attached to the initial quiver node (a, b): a in [n-k-1] active,
// a = n-k frozen, b in [k-1]. Pluecker-trivial nodes give the empty monomial.
DominantMonomial initial_monomial(int k, int n, int a, int b);

// g-vector <-> tableau dictionary (truncated g-vectors of length
// (k-1)(n-k-1), coordinate order (a-1)(k-1)+b).
Tableau gvector_to_tableau(const IntVec& g, int k, int n);
IntVec tableau_to_gvector(const Tableau& t);

// Number of columns of the tableau attached to g.
int gvector_degree(const IntVec& g, int k, int n);

// Bender-Knuth involution on letters i, i+1.
Tableau bender_knuth(const Tableau& t, int i);
Tableau promotion(const Tableau& t);
Tableau evacuation(const Tableau& t);

} // namespace tropsym
