#include "qminor/labels.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qminor {

std::string to_string(const Multilabel& J) {
    std::string out;
    for (std::size_t k = 0; k < J.size(); ++k) {
        if (k) out += ",";
        out += std::to_string(J[k]);
    }
    return out;
}

bool is_ascending(const Multilabel& J) {
    return std::is_sorted(J.begin(), J.end());
}

bool is_strictly_ascending(const Multilabel& J) {
    for (std::size_t k = 1; k < J.size(); ++k)
        if (J[k - 1] >= J[k]) return false;
    return true;
}

Multilabel sorted(Multilabel J) {
    std::sort(J.begin(), J.end());
    return J;
}

int inversions(const Multilabel& J) {
    int count = 0;
    for (std::size_t a = 0; a < J.size(); ++a)
        for (std::size_t b = a + 1; b < J.size(); ++b)
            if (J[a] > J[b]) ++count;
    return count;
}

Multilabel concat(const std::vector<Multilabel>& parts) {
    Multilabel out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

Multilabel sorted_concat(const std::vector<Multilabel>& parts) {
    return sorted(concat(parts));
}

Multilabel complement(const Multilabel& J, int n) {
    std::vector<bool> present(static_cast<std::size_t>(n) + 1, false);
    for (Label x : J) {
        if (x < 1 || x > n)
            throw std::out_of_range("complement: label " + std::to_string(x) +
                                    " out of range 1.." + std::to_string(n));
        if (present[x])
            throw std::invalid_argument("complement: repeated label " +
                                        std::to_string(x));
        present[x] = true;
    }
    Multilabel out;
    for (int x = 1; x <= n; ++x)
        if (!present[x]) out.push_back(x);
    return out;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int m = static_cast<int>(images_.size());
    std::vector<bool> seen(static_cast<std::size_t>(m) + 1, false);
    for (int v : images_) {
        if (v < 1 || v > m || seen[v])
            throw std::invalid_argument("Permutation: images are not a bijection of 1.." +
                                        std::to_string(m));
        seen[v] = true;
    }
    inversions_ = qminor::inversions(images_);
}

Permutation Permutation::identity(int m) {
    std::vector<int> img(static_cast<std::size_t>(m));
    std::iota(img.begin(), img.end(), 1);
    return Permutation(std::move(img));
}

Multilabel Permutation::apply(const Multilabel& J) const {
    if (static_cast<int>(J.size()) != degree())
        throw std::invalid_argument("Permutation::apply: size mismatch");
    Multilabel out(J.size());
    for (int a = 1; a <= degree(); ++a) out[a - 1] = J[images_[a - 1] - 1];
    return out;
}

std::vector<Permutation> all_permutations(int m) {
    std::vector<int> img(static_cast<std::size_t>(m));
    std::iota(img.begin(), img.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

namespace {

// Bubble-sort J ascending, multiplying in one factor per adjacent swap of a
// strictly descending pair (x, y), x > y. The factor is read off the S_r or
// S_l relation for that pair.
template <class FactorFn>
Scalar sort_factor(const ParamSpec& spec, Multilabel J, FactorFn factor) {
    for (Label x : J) spec.check_label(x);
    Scalar f = Scalar::one();
    bool moved = true;
    while (moved) {
        moved = false;
        for (std::size_t k = 0; k + 1 < J.size(); ++k) {
            if (J[k] > J[k + 1]) {
                f *= factor(J[k + 1], J[k]);  // ascending pair (small, large)
                std::swap(J[k], J[k + 1]);
                moved = true;
            }
        }
    }
    return f;
}

}  // namespace

Scalar zeta_r(const ParamSpec& spec, const Multilabel& J) {
    // r_y r_x -> q^-1 q_xy r_x r_y for x < y.
    return sort_factor(spec, J, [&](Label x, Label y) {
        return Scalar::q(-1) * q_param(spec, x, y);
    });
}

Scalar zeta_l(const ParamSpec& spec, const Multilabel& J) {
    // l^y l^x -> q q_xy^-1 l^x l^y for x < y.
    return sort_factor(spec, J, [&](Label x, Label y) {
        return Scalar::q(1) * q_param(spec, x, y).monomial_inverse();
    });
}

namespace {

void check_sign_args(const Permutation& sigma, const Multilabel& K, const char* who) {
    if (!is_strictly_ascending(K))
        throw std::invalid_argument(std::string(who) +
                                    ": multilabel must be strictly ascending "
                                    "without repetitions, got " +
                                    to_string(K));
    if (static_cast<int>(K.size()) != sigma.degree())
        throw std::invalid_argument(std::string(who) + ": |multilabel| != degree");
}

}  // namespace

Scalar row_sign(const ParamSpec& spec, const Permutation& sigma, const Multilabel& K) {
    check_sign_args(sigma, K, "row_sign");
    return neg_q_pow(sigma.inversions()) * zeta_l(spec, sigma.apply(K));
}

Scalar col_sign(const ParamSpec& spec, const Permutation& sigma, const Multilabel& L) {
    check_sign_args(sigma, L, "col_sign");
    return neg_q_pow(sigma.inversions()) * zeta_r(spec, sigma.apply(L));
}

}  // namespace qminor
