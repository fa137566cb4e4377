// Copyright 2026 The gcliff Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gcliff/forms.hpp"

#include <cmath>
#include <numbers>

#include "gcliff/arith.hpp"
#include "gcliff/error.hpp"

namespace gcliff {

PhaseRational::PhaseRational(int64_t num, int64_t den) {
    require(den != 0, ErrorCode::InvalidArgument, "phase denominator is zero");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    num = mod(num, den);
    int64_t g = std::gcd(num, den);
    if (g == 0) {
        g = den;
    }
    num_ = num / g;
    den_ = den / g;
}

PhaseRational PhaseRational::operator+(const PhaseRational &o) const {
    int64_t l = lcm64(den_, o.den_);
    __int128 n = static_cast<__int128>(num_) * (l / den_) + static_cast<__int128>(o.num_) * (l / o.den_);
    return PhaseRational(static_cast<int64_t>(n % l), l);
}

PhaseRational PhaseRational::operator-() const { return PhaseRational(-num_, den_); }

PhaseRational PhaseRational::operator-(const PhaseRational &o) const { return *this + (-o); }

PhaseRational PhaseRational::operator*(int64_t k) const {
    return PhaseRational(mul_mod(num_, mod(k, den_), den_), den_);
}

bool PhaseRational::operator<(const PhaseRational &o) const {
    return static_cast<__int128>(num_) * o.den_ < static_cast<__int128>(o.num_) * den_;
}

std::complex<double> PhaseRational::to_complex() const {
    double angle = 2.0 * std::numbers::pi * static_cast<double>(num_) / static_cast<double>(den_);
    return {std::cos(angle), std::sin(angle)};
}

std::string PhaseRational::str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

PhaseRational PhaseRational::parse(const std::string &text) {
    size_t slash = text.find('/');
    try {
        size_t used = 0;
        if (slash == std::string::npos) {
            int64_t n = std::stoll(text, &used);
            require(used == text.size(), ErrorCode::ParseError, "bad phase '" + text + "'");
            return PhaseRational(n, 1);
        }
        std::string a = text.substr(0, slash);
        std::string b = text.substr(slash + 1);
        int64_t n = std::stoll(a, &used);
        require(used == a.size(), ErrorCode::ParseError, "bad phase '" + text + "'");
        int64_t d = std::stoll(b, &used);
        require(used == b.size() && d != 0, ErrorCode::ParseError, "bad phase '" + text + "'");
        return PhaseRational(n, d);
    } catch (const std::logic_error &) {
        fail(ErrorCode::ParseError, "bad phase '" + text + "'");
    }
}

PhaseRational pairing(const GroupElement &x, const GroupElement &y) {
    check_same_group(x.group(), y.group(), "pairing");
    PhaseRational out;
    for (size_t i = 0; i < x.residues().size(); i++) {
        int64_t q = x.group().order(i);
        out = out + PhaseRational(mul_mod(x[i], y[i], q), q);
    }
    return out;
}

PhaseRational char_eval(const Character &chi, const GroupElement &g) { return pairing(chi, g); }

SymmetricBilinearForm::SymmetricBilinearForm(Group group, std::vector<std::vector<int64_t>> coeffs)
    : group_(std::move(group)), coeffs_(std::move(coeffs)) {
    const size_t d = group_.rank();
    require(coeffs_.size() == d, ErrorCode::InvalidArgument, "bilinear form matrix has wrong size");
    for (size_t i = 0; i < d; i++) {
        require(coeffs_[i].size() == d, ErrorCode::InvalidArgument, "bilinear form matrix has wrong size");
        for (size_t j = 0; j < d; j++) {
            coeffs_[i][j] = mod(coeffs_[i][j], std::gcd(group_.order(i), group_.order(j)));
        }
    }
    for (size_t i = 0; i < d; i++) {
        for (size_t j = 0; j < i; j++) {
            require(coeffs_[i][j] == coeffs_[j][i], ErrorCode::InvalidArgument,
                    "bilinear form is not symmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
    }
}

SymmetricBilinearForm SymmetricBilinearForm::zero(const Group &g) {
    return SymmetricBilinearForm(g, std::vector<std::vector<int64_t>>(g.rank(), std::vector<int64_t>(g.rank(), 0)));
}

PhaseRational bilinear_eval(const SymmetricBilinearForm &b, const GroupElement &g, const GroupElement &h) {
    check_same_group(b.group(), g.group(), "bilinear_eval");
    check_same_group(b.group(), h.group(), "bilinear_eval");
    PhaseRational out;
    const Group &G = b.group();
    for (size_t i = 0; i < G.rank(); i++) {
        for (size_t j = 0; j < G.rank(); j++) {
            if (b.coeff(i, j) == 0) {
                continue;
            }
            int64_t m = std::gcd(G.order(i), G.order(j));
            out = out + PhaseRational(mul_mod(mul_mod(b.coeff(i, j), g[i], m), h[j], m), m);
        }
    }
    return out;
}

HomMatrix induced_map(const SymmetricBilinearForm &b) {
    const Group &G = b.group();
    HomMatrix m = HomMatrix::zero(G, G);
    for (size_t i = 0; i < G.rank(); i++) {
        for (size_t j = 0; j < G.rank(); j++) {
            int64_t qi = G.order(i), qj = G.order(j);
            m.set(j, i, b.coeff(i, j) * (qj / std::gcd(qi, qj)));
        }
    }
    return m;
}

QuadraticForm::QuadraticForm(Group group, std::vector<int64_t> diag, std::vector<std::vector<int64_t>> cross,
                             std::vector<int64_t> linear)
    : group_(group), diag_(std::move(diag)), linear_(group, std::move(linear)) {
    const size_t d = group_.rank();
    require(diag_.size() == d, ErrorCode::InvalidArgument, "quadratic form diag has wrong length");
    if (cross.empty()) {
        cross.assign(d, std::vector<int64_t>(d, 0));
    }
    require(cross.size() == d, ErrorCode::InvalidArgument, "quadratic form cross matrix has wrong size");
    cross_.assign(d, std::vector<int64_t>(d, 0));
    for (size_t i = 0; i < d; i++) {
        int64_t q = group_.order(i);
        diag_[i] = mod(diag_[i], 2 * q);
        require(diag_[i] * q % 2 == 0, ErrorCode::InvalidArgument,
                "diag coefficient " + std::to_string(diag_[i]) + " is odd on odd-order factor " + std::to_string(i));
        require(cross[i].size() == d, ErrorCode::InvalidArgument, "quadratic form cross matrix has wrong size");
        for (size_t j = i + 1; j < d; j++) {
            cross_[i][j] = mod(cross[i][j], std::gcd(q, group_.order(j)));
        }
    }
}

QuadraticForm QuadraticForm::zero(const Group &g) { return diagonal(g, std::vector<int64_t>(g.rank(), 0)); }

QuadraticForm QuadraticForm::diagonal(const Group &g, std::vector<int64_t> diag) {
    return QuadraticForm(g, std::move(diag), {}, std::vector<int64_t>(g.rank(), 0));
}

PhaseRational quad_eval(const QuadraticForm &xi, const GroupElement &g) {
    check_same_group(xi.group(), g.group(), "quad_eval");
    const Group &G = xi.group();
    PhaseRational out;
    for (size_t i = 0; i < G.rank(); i++) {
        int64_t q = G.order(i);
        out = out + PhaseRational(mul_mod(xi.diag()[i], mul_mod(g[i], g[i], 2 * q), 2 * q), 2 * q);
        out = out + PhaseRational(mul_mod(xi.linear()[i], g[i], q), q);
        for (size_t j = i + 1; j < G.rank(); j++) {
            int64_t c = xi.cross()[i][j];
            if (c != 0) {
                int64_t m = std::gcd(q, G.order(j));
                out = out + PhaseRational(mul_mod(mul_mod(c, g[i], m), g[j], m), m);
            }
        }
    }
    return out;
}

QuadraticForm quad_negate(const QuadraticForm &xi) {
    const Group &G = xi.group();
    std::vector<int64_t> diag(G.rank());
    std::vector<std::vector<int64_t>> cross(G.rank(), std::vector<int64_t>(G.rank(), 0));
    std::vector<int64_t> lin(G.rank());
    for (size_t i = 0; i < G.rank(); i++) {
        diag[i] = -xi.diag()[i];
        lin[i] = -xi.linear()[i];
        for (size_t j = i + 1; j < G.rank(); j++) {
            cross[i][j] = -xi.cross()[i][j];
        }
    }
    return QuadraticForm(G, diag, cross, lin);
}

SymmetricBilinearForm polarize(const QuadraticForm &xi) {
    const Group &G = xi.group();
    std::vector<std::vector<int64_t>> b(G.rank(), std::vector<int64_t>(G.rank(), 0));
    for (size_t i = 0; i < G.rank(); i++) {
        b[i][i] = xi.diag()[i];
        for (size_t j = i + 1; j < G.rank(); j++) {
            b[i][j] = xi.cross()[i][j];
            b[j][i] = xi.cross()[i][j];
        }
    }
    return SymmetricBilinearForm(G, std::move(b));
}

QuadraticForm lift_bilinear(const SymmetricBilinearForm &b) {
    const Group &G = b.group();
    std::vector<int64_t> diag(G.rank());
    std::vector<std::vector<int64_t>> cross(G.rank(), std::vector<int64_t>(G.rank(), 0));
    for (size_t i = 0; i < G.rank(); i++) {
        int64_t q = G.order(i);
        diag[i] = b.coeff(i, i);
        if (q % 2 == 1 && diag[i] % 2 == 1) {
            diag[i] += q;
        }
        for (size_t j = i + 1; j < G.rank(); j++) {
            cross[i][j] = b.coeff(i, j);
        }
    }
    return QuadraticForm(G, diag, cross, std::vector<int64_t>(G.rank(), 0));
}

bool is_nondegenerate(const QuadraticForm &xi) { return is_automorphism(induced_map(polarize(xi))); }

namespace {

// The form on `h` with bilinear part `b` and values `gen_values` on the
// generators. Fails when the data is not that of a quadratic function.
QuadraticForm assemble_form(const Group &h, const std::vector<std::vector<PhaseRational>> &b,
                            const std::vector<PhaseRational> &gen_values) {
    const size_t d = h.rank();
    std::vector<std::vector<int64_t>> coeffs(d, std::vector<int64_t>(d));
    for (size_t i = 0; i < d; i++) {
        for (size_t j = 0; j < d; j++) {
            int64_t m = std::gcd(h.order(i), h.order(j));
            require(m % b[i][j].den() == 0, ErrorCode::PreconditionFailed,
                    "pairing of generators " + std::to_string(i) + "," + std::to_string(j) + " has order " +
                        std::to_string(b[i][j].den()) + " not dividing " + std::to_string(m));
            coeffs[i][j] = b[i][j].num() * (m / b[i][j].den());
        }
    }
    SymmetricBilinearForm sym(h, coeffs);
    QuadraticForm base = lift_bilinear(sym);
    std::vector<int64_t> lin(d);
    for (size_t i = 0; i < d; i++) {
        PhaseRational diff = gen_values[i] - quad_eval(base, GroupElement::basis(h, i));
        require(h.order(i) % diff.den() == 0, ErrorCode::PreconditionFailed,
                "values on generator " + std::to_string(i) + " are not those of a quadratic function");
        lin[i] = diff.num() * (h.order(i) / diff.den());
    }
    return QuadraticForm(h, base.diag(), base.cross(), lin);
}

}  // namespace

QuadraticForm pullback(const QuadraticForm &xi, const HomMatrix &phi) {
    check_same_group(xi.group(), phi.target(), "pullback");
    const Group &h = phi.source();
    SymmetricBilinearForm b = polarize(xi);
    std::vector<GroupElement> images;
    for (size_t i = 0; i < h.rank(); i++) {
        images.push_back(phi.column(i));
    }
    std::vector<std::vector<PhaseRational>> bv(h.rank(), std::vector<PhaseRational>(h.rank()));
    std::vector<PhaseRational> vals(h.rank());
    for (size_t i = 0; i < h.rank(); i++) {
        vals[i] = quad_eval(xi, images[i]);
        for (size_t j = 0; j < h.rank(); j++) {
            bv[i][j] = bilinear_eval(b, images[i], images[j]);
        }
    }
    return assemble_form(h, bv, vals);
}

QuadraticForm extend_by_zero(const QuadraticForm &xi, const Group &h, bool xi_first) {
    const Group &g = xi.group();
    Group out = xi_first ? group_product(g, h) : group_product(h, g);
    size_t off = xi_first ? 0 : h.rank();
    size_t d = out.rank();
    std::vector<int64_t> diag(d, 0), lin(d, 0);
    std::vector<std::vector<int64_t>> cross(d, std::vector<int64_t>(d, 0));
    for (size_t i = 0; i < g.rank(); i++) {
        diag[off + i] = xi.diag()[i];
        lin[off + i] = xi.linear()[i];
        for (size_t j = i + 1; j < g.rank(); j++) {
            cross[off + i][off + j] = xi.cross()[i][j];
        }
    }
    return QuadraticForm(out, diag, cross, lin);
}

bool quad_equal(const QuadraticForm &a, const QuadraticForm &b) {
    if (a.group() != b.group() || !(polarize(a) == polarize(b))) {
        return false;
    }
    for (size_t i = 0; i < a.group().rank(); i++) {
        auto e = GroupElement::basis(a.group(), i);
        if (quad_eval(a, e) != quad_eval(b, e)) {
            return false;
        }
    }
    return true;
}

PhaseTable quad_table(const QuadraticForm &xi) {
    PhaseTable out;
    for (const auto &g : enumerate_elements(xi.group())) {
        out[g.residues()] = quad_eval(xi, g);
    }
    return out;
}

void check_table(const Group &g, const PhaseTable &table) {
    for (const auto &e : enumerate_elements(g)) {
        if (!table.count(e.residues())) {
            std::string lit;
            for (size_t i = 0; i < e.residues().size(); i++) {
                lit += (i ? "," : "") + std::to_string(e[i]);
            }
            fail(ErrorCode::IncompleteTable, "phase table has no entry for element (" + lit + ")");
        }
    }
}

bool is_quadratic_table(const Group &g, const PhaseTable &table) {
    check_table(g, table);
    auto elems = enumerate_elements(g);
    const size_t n = elems.size();
    std::vector<PhaseRational> vals(n);
    for (size_t k = 0; k < n; k++) {
        vals[k] = table.at(elems[k].residues());
    }
    auto b = [&](const GroupElement &x, const GroupElement &y) {
        return vals[element_index(x + y)] - vals[element_index(x)] - vals[element_index(y)];
    };
    // Additivity of the first slot along each generator suffices; symmetry
    // of b covers the second slot.
    for (size_t i = 0; i < g.rank(); i++) {
        auto e = GroupElement::basis(g, i);
        for (const auto &x : elems) {
            for (const auto &y : elems) {
                if (b(x + e, y) != b(x, y) + b(e, y)) {
                    return false;
                }
            }
        }
    }
    return true;
}

QuadraticForm fit_quadratic_form(const Group &g, const PhaseTable &table) {
    require(is_quadratic_table(g, table), ErrorCode::PreconditionFailed, "phase table is not a quadratic form");
    std::vector<std::vector<PhaseRational>> bv(g.rank(), std::vector<PhaseRational>(g.rank()));
    std::vector<PhaseRational> vals(g.rank());
    for (size_t i = 0; i < g.rank(); i++) {
        auto ei = GroupElement::basis(g, i);
        vals[i] = table.at(ei.residues());
        for (size_t j = 0; j < g.rank(); j++) {
            auto ej = GroupElement::basis(g, j);
            bv[i][j] = table.at((ei + ej).residues()) - vals[i] - table.at(ej.residues());
        }
    }
    return assemble_form(g, bv, vals);
}

HomMatrix i_xi_matrix(const QuadraticForm &xi) {
    HomMatrix m = induced_map(polarize(xi));
    require(is_automorphism(m), ErrorCode::DegenerateForm, "quadratic form is degenerate");
    HomMatrix inv = invert_automorphism(m);
    HomMatrix out = HomMatrix::zero(xi.group(), xi.group());
    for (size_t i = 0; i < inv.rows(); i++) {
        for (size_t j = 0; j < inv.cols(); j++) {
            out.set(i, j, -inv.at(i, j));
        }
    }
    return out;
}

GroupElement i_xi(const QuadraticForm &xi, const Character &chi) {
    check_same_group(xi.group(), chi.group(), "i_xi");
    return hom_apply(i_xi_matrix(xi), chi);
}

Character i_xi_inverse(const QuadraticForm &xi, const GroupElement &t) {
    check_same_group(xi.group(), t.group(), "i_xi_inverse");
    require(is_nondegenerate(xi), ErrorCode::DegenerateForm, "quadratic form is degenerate");
    return Character(-hom_apply(induced_map(polarize(xi)), t));
}

}  // namespace gcliff
