#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <map>
#include <vector>

#include "nervemorse/complex.hpp"

namespace nervemorse {

// All linear algebra in this module is exact; no floating point anywhere.
using BigInt = boost::multiprecision::cpp_int;

class IntegerMatrix {
public:
    IntegerMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static IntegerMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    BigInt& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const BigInt& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    IntegerMatrix operator*(const IntegerMatrix& other) const;
    bool operator==(const IntegerMatrix& other) const = default;

private:
    std::size_t rows_, cols_;
    std::vector<BigInt> a_;
};

struct SmithResult {
    std::vector<BigInt> invariant_factors;  // d_1 | d_2 | ... | d_r, all positive
    std::size_t rank;                       // == invariant_factors.size()
};

// Invariant factors of A. Elementary row/column operations are accumulated
// into unimodular transforms and the identity U*A*V == D is re-verified on
// every call before the result is returned.
SmithResult smith_normal_form(const IntegerMatrix& a);

// Reduced integer homology data: Betti numbers and torsion coefficients per
// degree. Only nonzero Betti entries and nonempty torsion lists are stored,
// and each torsion list is in invariant-factor form (sorted divisibility
// chain), so operator== is a canonical comparison.
struct HomologyProfile {
    std::map<int, long long> betti;
    std::map<int, std::vector<long long>> torsion;

    bool trivial() const { return betti.empty() && torsion.empty(); }
    bool operator==(const HomologyProfile& other) const = default;

    long long betti_at(int k) const {
        auto it = betti.find(k);
        return it == betti.end() ? 0 : it->second;
    }
};

// Matrix of the simplicial boundary operator from k-cells to (k-1)-cells in
// canonical face order, entries +-1 from the sorted-vertex orientation.
// Requires k >= 1; the augmentation in degree 0 is handled by reduced_homology.
IntegerMatrix boundary_matrix(const SimplicialComplex& k_complex, int k);

HomologyProfile reduced_homology(const SimplicialComplex& k_complex);

// Degreewise sum for a wedge of spaces. Betti numbers add; torsion multisets
// merge and are renormalized into a divisibility chain.
HomologyProfile wedge_profile(const std::vector<HomologyProfile>& profiles);

}  // namespace nervemorse
