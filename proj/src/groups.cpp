#include "apollo/groups.hpp"

#include <map>
#include <sstream>

namespace apollo {

RationalMatrix RationalMatrix::identity(size_t n) {
    RationalMatrix m(n);
    for (size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
    if (n_ != o.n_) {
        throw std::invalid_argument("RationalMatrix: dimension mismatch");
    }
    RationalMatrix r(n_);
    for (size_t i = 0; i < n_; ++i) {
        for (size_t k = 0; k < n_; ++k) {
            const Rat& aik = (*this)(i, k);
            if (aik == 0) {
                continue;
            }
            for (size_t j = 0; j < n_; ++j) {
                r(i, j) += aik * o(k, j);
            }
        }
    }
    return r;
}

RationalMatrix RationalMatrix::operator-() const {
    RationalMatrix r = *this;
    for (Rat& x : r.a_) {
        x = -x;
    }
    return r;
}

std::vector<Rat> RationalMatrix::operator*(const std::vector<Rat>& v) const {
    if (v.size() != n_) {
        throw std::invalid_argument("RationalMatrix: vector dimension mismatch");
    }
    std::vector<Rat> r(n_, Rat(0));
    for (size_t i = 0; i < n_; ++i) {
        for (size_t j = 0; j < n_; ++j) {
            r[i] += (*this)(i, j) * v[j];
        }
    }
    return r;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix r(n_);
    for (size_t i = 0; i < n_; ++i) {
        for (size_t j = 0; j < n_; ++j) {
            r(j, i) = (*this)(i, j);
        }
    }
    return r;
}

Rat RationalMatrix::determinant() const {
    RationalMatrix m = *this;
    Rat det = 1;
    for (size_t col = 0; col < n_; ++col) {
        size_t pivot = col;
        while (pivot < n_ && m(pivot, col) == 0) {
            ++pivot;
        }
        if (pivot == n_) {
            return 0;
        }
        if (pivot != col) {
            for (size_t j = 0; j < n_; ++j) {
                std::swap(m(pivot, j), m(col, j));
            }
            det = -det;
        }
        det *= m(col, col);
        Rat inv = Rat(1) / m(col, col);
        for (size_t i = col + 1; i < n_; ++i) {
            if (m(i, col) == 0) {
                continue;
            }
            Rat f = m(i, col) * inv;
            for (size_t j = col; j < n_; ++j) {
                m(i, j) -= f * m(col, j);
            }
        }
    }
    return det;
}

std::string RationalMatrix::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < n_; ++i) {
        os << (i == 0 ? "[" : " ");
        for (size_t j = 0; j < n_; ++j) {
            os << (*this)(i, j) << (j + 1 < n_ ? " " : "");
        }
        os << (i + 1 < n_ ? "\n" : "]");
    }
    return os.str();
}

RationalMatrix gram(size_t m) {
    if (m < 2) {
        throw std::invalid_argument("gram: dimension must be at least 2");
    }
    RationalMatrix g(m);
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < m; ++j) {
            g(i, j) = (i == j) ? Rat(3 - static_cast<long>(m)) : Rat(1);
        }
    }
    return g;
}

RationalMatrix gen_M(size_t m, size_t i) {
    if (m < 2) {
        throw std::invalid_argument("gen_M: dimension must be at least 2");
    }
    if (m == 3) {
        throw DimThreeUndefinedError("gen_M: undefined at dimension 3 (division by m-3)");
    }
    if (i < 1 || i > m) {
        throw std::out_of_range("gen_M: slot out of range");
    }
    RationalMatrix x = RationalMatrix::identity(m);
    size_t r = i - 1;
    x(r, r) = -1;
    Rat coeff = make_rat(2, static_cast<long>(m) - 3);
    for (size_t j = 0; j < m; ++j) {
        if (j != r) {
            x(r, j) = coeff;
        }
    }
    return x;
}

RationalMatrix gen_N(size_t m, size_t i) {
    if (m < 2) {
        throw std::invalid_argument("gen_N: dimension must be at least 2");
    }
    if (i < 1 || i > m) {
        throw std::out_of_range("gen_N: slot out of range");
    }
    RationalMatrix x = RationalMatrix::identity(m);
    size_t c = i - 1;
    x(c, c) = -1;
    for (size_t j = 0; j < m; ++j) {
        if (j != c) {
            x(j, c) = 2;
        }
    }
    return x;
}

RationalMatrix reflection_from_axis(const std::vector<Rat>& axis,
                                    const RationalMatrix& g) {
    size_t m = g.dim();
    if (axis.size() != m) {
        throw std::invalid_argument("reflection_from_axis: dimension mismatch");
    }
    std::vector<Rat> gv = g * axis;
    Rat vgv = 0;
    for (size_t i = 0; i < m; ++i) {
        vgv += axis[i] * gv[i];
    }
    if (vgv == 0) {
        throw IsotropicAxisError("reflection_from_axis: axis is isotropic");
    }
    RationalMatrix r = RationalMatrix::identity(m);
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < m; ++j) {
            r(i, j) -= 2 * axis[i] * gv[j] / vgv;
        }
    }
    return r;
}

PropertyReport check_generator_properties(size_t m) {
    PropertyReport rep;
    rep.apo_checked = (m != 3);
    RationalMatrix g = gram(m);
    RationalMatrix id = RationalMatrix::identity(m);

    std::vector<RationalMatrix> ms, ns;
    for (size_t i = 1; i <= m; ++i) {
        if (rep.apo_checked) {
            ms.push_back(gen_M(m, i));
        }
        ns.push_back(gen_N(m, i));
    }
    std::vector<const RationalMatrix*> all;
    for (const auto& x : ms) {
        all.push_back(&x);
    }
    for (const auto& x : ns) {
        all.push_back(&x);
    }

    rep.involutions = true;
    rep.orthogonal = true;
    rep.determinant_minus_one = true;
    for (const RationalMatrix* x : all) {
        rep.involutions = rep.involutions && (*x * *x == id);
        rep.orthogonal = rep.orthogonal && (x->transpose() * g * *x == g);
        rep.determinant_minus_one =
            rep.determinant_minus_one && (x->determinant() == -1);
    }

    if (rep.apo_checked) {
        rep.cross_commutation = true;
        for (size_t i = 0; i < m; ++i) {
            for (size_t j = 0; j < m; ++j) {
                if (i == j) {
                    continue;
                }
                rep.cross_commutation =
                    rep.cross_commutation && (ms[i] * ns[j] == ns[j] * ms[i]);
            }
        }
        rep.transpose_duality = true;
        for (size_t i = 0; i < m; ++i) {
            rep.transpose_duality =
                rep.transpose_duality && (ns[i] == ms[i].transpose());
        }
        if (m == 2) {
            rep.n_negates_m = (ns[0] == -ms[1]) && (ns[1] == -ms[0]);
        }
    }
    return rep;
}

std::vector<size_t> cayley_sphere_sizes(const GroupSpec& spec, size_t depth,
                                        size_t element_budget) {
    if (spec.dim < 2) {
        throw std::invalid_argument("cayley_sphere_sizes: dimension must be at least 2");
    }
    std::vector<RationalMatrix> gens;
    if (spec.family == GroupFamily::Apo || spec.family == GroupFamily::Des) {
        for (size_t i = 1; i <= spec.dim; ++i) {
            gens.push_back(gen_M(spec.dim, i));
        }
    }
    if (spec.family == GroupFamily::Kal || spec.family == GroupFamily::Des) {
        for (size_t i = 1; i <= spec.dim; ++i) {
            gens.push_back(gen_N(spec.dim, i));
        }
    }

    std::map<std::vector<Rat>, size_t> seen;
    std::vector<RationalMatrix> frontier{RationalMatrix::identity(spec.dim)};
    seen.emplace(frontier[0].entries(), 0);
    std::vector<size_t> spheres{1};
    for (size_t k = 1; k <= depth; ++k) {
        std::vector<RationalMatrix> next;
        for (const RationalMatrix& x : frontier) {
            for (const RationalMatrix& gmat : gens) {
                RationalMatrix y = gmat * x;
                if (seen.emplace(y.entries(), k).second) {
                    next.push_back(std::move(y));
                    if (seen.size() > element_budget) {
                        throw std::length_error("cayley_sphere_sizes: element budget exceeded");
                    }
                }
            }
        }
        spheres.push_back(next.size());
        frontier = std::move(next);
    }
    return spheres;
}

}  // namespace apollo
