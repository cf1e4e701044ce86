#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "apollo/exact.hpp"
#include "apollo/report.hpp"

namespace apollo {

struct DimThreeUndefinedError : std::domain_error {
    using std::domain_error::domain_error;
};
struct IsotropicAxisError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Dense square matrix of exact rationals. Sizes here are tiny (m <= 8 in
/// practice), so a plain row-major vector is all that is needed.
class RationalMatrix {
public:
    RationalMatrix() = default;
    explicit RationalMatrix(size_t n) : n_(n), a_(n * n, Rat(0)) {}

    static RationalMatrix identity(size_t n);

    size_t dim() const { return n_; }

    Rat& operator()(size_t i, size_t j) { return a_[i * n_ + j]; }
    const Rat& operator()(size_t i, size_t j) const { return a_[i * n_ + j]; }

    RationalMatrix operator*(const RationalMatrix& o) const;
    RationalMatrix operator-() const;
    std::vector<Rat> operator*(const std::vector<Rat>& v) const;
    bool operator==(const RationalMatrix&) const = default;

    RationalMatrix transpose() const;
    Rat determinant() const;  // Gaussian elimination over the rationals

    /// Canonical key for dedup in orbit enumeration; rationals are always
    /// stored in lowest terms, so the flat entry list is already canonical.
    const std::vector<Rat>& entries() const { return a_; }

    std::string to_string() const;

private:
    size_t n_ = 0;
    std::vector<Rat> a_;
};

enum class GroupFamily { Kal, Apo, Des };

struct GroupSpec {
    size_t dim;          // m >= 2
    GroupFamily family;  // Apo and Des undefined at m = 3
};

/// Gram matrix with diagonal 3-m and off-diagonal 1.
RationalMatrix gram(size_t m);

/// Descartes-move generator: id - 2 e_ii + (2/(m-3)) sum_{j != i} e_ij.
/// Undefined at m = 3 (DimThreeUndefinedError). Slots are 1-based.
RationalMatrix gen_M(size_t m, size_t i);

/// Self-inversion generator: id - 2 e_ii + 2 sum_{j != i} e_ji.
RationalMatrix gen_N(size_t m, size_t i);

/// Orthogonal reflection id - 2 (v v^T G) / (v^T G v) fixing the G-orthogonal
/// hyperplane of the axis. Throws IsotropicAxisError when v^T G v = 0.
RationalMatrix reflection_from_axis(const std::vector<Rat>& axis,
                                    const RationalMatrix& g);

struct PropertyReport {
    bool involutions = false;          // X^2 = id for every generator
    bool orthogonal = false;           // X^T G X = G
    bool determinant_minus_one = false;
    bool cross_commutation = false;    // [M_i, N_j] = 0 for i != j
    bool transpose_duality = false;    // N_i = M_i^T (holds only at m = 4)
    bool n_negates_m = false;          // m = 2 relation: N_1 = -M_2, N_2 = -M_1
    bool apo_checked = false;          // false when m = 3 (M generators skipped)

    bool core_ok() const {
        return involutions && orthogonal && determinant_minus_one &&
               (cross_commutation || !apo_checked);
    }
};

/// Exercise the generator identities at dimension m. At m = 3 only the
/// self-inversion family is checked.
PropertyReport check_generator_properties(size_t m);

/// Number of distinct group elements at each word distance 0..depth from the
/// identity, by breadth-first products with exact-entry dedup. The element
/// budget caps runaway enumerations.
std::vector<size_t> cayley_sphere_sizes(const GroupSpec& spec, size_t depth,
                                        size_t element_budget = 1000000);

}  // namespace apollo
