#pragma once

#include <string>
#include <vector>

#include "tropsym/errors.hpp"

namespace tropsym {

using IntMat = std::vector<std::vector<long long>>;
using IntVec = std::vector<long long>;

IntMat identity_mat(int n);
IntMat mat_mul(const IntMat& a, const IntMat& b);
IntMat mat_transpose(const IntMat& a);
IntMat mat_neg(const IntMat& a);
bool mat_eq(const IntMat& a, const IntMat& b);
std::string mat_str(const IntMat& a);
// Rank of an integer matrix, exact (fraction-free elimination).
int mat_rank(const IntMat& a);

// Skew-symmetrizable integer exchange matrix. Construction verifies the
// existence of a positive diagonal D with D*B skew-symmetric, searching
// diagonal entries up to 6.
class ExchangeMatrix {
  public:
    ExchangeMatrix() : n_(0) {}
    explicit ExchangeMatrix(IntMat b);

    int n() const { return n_; }
    const IntMat& mat() const { return b_; }
    long long at(int i, int j) const { return b_[i][j]; }

    ExchangeMatrix op() const { return ExchangeMatrix(mat_neg(b_)); }
    ExchangeMatrix dual() const { return ExchangeMatrix(mat_neg(mat_transpose(b_))); }

    static ExchangeMatrix c2() { return ExchangeMatrix({{0, 2}, {-1, 0}}); }
    static ExchangeMatrix b2() { return c2().dual(); }
    static ExchangeMatrix a2() { return ExchangeMatrix({{0, 1}, {-1, 0}}); }

  private:
    int n_;
    IntMat b_;
};

// A labelled seed carrying the exchange matrix together with the C- and
// G-matrices tracked from the reference vertex. At the reference vertex both
// C and G are the identity.
struct Seed {
    ExchangeMatrix b;
    IntMat c;
    IntMat g;
    std::vector<int> label; // mutation word from the reference vertex, 1-based nodes

    static Seed reference(const ExchangeMatrix& b0);
};

// One seed mutation at node k (1-based). reference_b0 is the exchange matrix
// at the vertex the C/G matrices are tracked from.
Seed mutate_seed(const Seed& s, int k, const ExchangeMatrix& reference_b0);

enum class Conv { Max, Min };

// One tropicalised coefficient-mutation step at node k (1-based), taking the
// exchange matrix of the current seed. The Max convention realizes the
// mutation of the dual coefficient data; Min is the opposite-matrix variant.
IntVec trop_step(const IntVec& v, const ExchangeMatrix& b, int k, Conv conv);

// Compose trop_step along a mutation word, mutating the carried exchange
// matrix as it goes.
IntVec trop_compose(const IntVec& v, const ExchangeMatrix& b0, const std::vector<int>& word,
                    Conv conv);

struct DualityReport {
    bool g_transpose_cdual = false;  // (G_{t,t0})^T * C^dual_{t,t0} == 1
    bool gdual_transpose_c = false;  // (G^dual_{t,t0})^T * C_{t,t0} == 1
    bool c_op_inverse = false;       // C_{t,t0} * C^op_{t0,t} == 1
    bool cdual_opdual_inverse = false;
    std::string detail;
    bool all() const {
        return g_transpose_cdual && gdual_transpose_c && c_op_inverse && cdual_opdual_inverse;
    }
};

// Checks the tropical duality identities for the seeds reached from the four
// matched reference matrices (B, B^dual, B^op, B^op,dual) along `word`.
DualityReport check_tropical_duality(const ExchangeMatrix& b0, const std::vector<int>& word);

} // namespace tropsym
