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

#include "gcliff/group.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>

#include "gcliff/arith.hpp"
#include "gcliff/error.hpp"

namespace gcliff {

Group::Group(std::vector<int64_t> orders) {
    require(!orders.empty(), ErrorCode::InvalidArgument, "a group needs at least one cyclic factor");
    Data d;
    d.canonical = true;
    d.exponent = 1;
    d.size = 1;
    for (size_t i = 0; i < orders.size(); i++) {
        int64_t q = orders[i];
        require(q >= 2, ErrorCode::InvalidArgument,
                "cyclic order " + std::to_string(q) + " is < 2 (trivial factors are not allowed)");
        if (i > 0 && orders[i - 1] % q != 0) {
            d.canonical = false;
        }
        d.exponent = lcm64(d.exponent, q);
        if (d.size > std::numeric_limits<uint64_t>::max() / static_cast<uint64_t>(q)) {
            d.size = std::numeric_limits<uint64_t>::max();
        } else if (d.size != std::numeric_limits<uint64_t>::max()) {
            d.size *= static_cast<uint64_t>(q);
        }
    }
    d.orders = std::move(orders);
    data_ = std::make_shared<const Data>(std::move(d));
}

Group Group::power(size_t n) const {
    require(n >= 1, ErrorCode::InvalidArgument, "group power needs n >= 1");
    std::vector<int64_t> all;
    all.reserve(rank() * n);
    for (size_t k = 0; k < n; k++) {
        all.insert(all.end(), orders().begin(), orders().end());
    }
    return Group(std::move(all));
}

std::string Group::literal() const {
    std::ostringstream out;
    for (size_t i = 0; i < rank(); i++) {
        if (i) {
            out << ',';
        }
        out << order(i);
    }
    return out.str();
}

Group make_group(const std::vector<int64_t> &orders) { return Group(orders); }

Group parse_group(const std::string &literal) {
    std::vector<int64_t> orders;
    std::stringstream ss(literal);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t a = item.find_first_not_of(" \t");
        size_t b = item.find_last_not_of(" \t");
        require(a != std::string::npos, ErrorCode::ParseError, "empty factor in group literal '" + literal + "'");
        item = item.substr(a, b - a + 1);
        size_t used = 0;
        int64_t v = 0;
        try {
            v = std::stoll(item, &used);
        } catch (const std::exception &) {
            fail(ErrorCode::ParseError, "bad factor '" + item + "' in group literal '" + literal + "'");
        }
        require(used == item.size(), ErrorCode::ParseError,
                "bad factor '" + item + "' in group literal '" + literal + "'");
        orders.push_back(v);
    }
    require(!orders.empty(), ErrorCode::ParseError, "empty group literal");
    return Group(std::move(orders));
}

Group group_product(const Group &a, const Group &b) {
    std::vector<int64_t> all = a.orders();
    all.insert(all.end(), b.orders().begin(), b.orders().end());
    return Group(std::move(all));
}

void check_same_group(const Group &a, const Group &b, const char *context) {
    if (a != b) {
        fail(ErrorCode::GroupMismatch,
             std::string(context) + ": group mismatch (" + a.literal() + " vs " + b.literal() + ")");
    }
}

GroupElement::GroupElement(Group group, std::vector<int64_t> residues)
    : group_(std::move(group)), residues_(std::move(residues)) {
    require(residues_.size() == group_.rank(), ErrorCode::InvalidArgument,
            "element has " + std::to_string(residues_.size()) + " residues, group has rank " +
                std::to_string(group_.rank()));
    for (size_t i = 0; i < residues_.size(); i++) {
        residues_[i] = mod(residues_[i], group_.order(i));
    }
}

GroupElement GroupElement::zero(const Group &group) {
    return GroupElement(group, std::vector<int64_t>(group.rank(), 0));
}

GroupElement GroupElement::basis(const Group &group, size_t i) {
    std::vector<int64_t> r(group.rank(), 0);
    r.at(i) = 1;
    return GroupElement(group, std::move(r));
}

bool GroupElement::is_zero() const {
    return std::all_of(residues_.begin(), residues_.end(), [](int64_t v) { return v == 0; });
}

GroupElement elem_add(const GroupElement &a, const GroupElement &b) {
    check_same_group(a.group(), b.group(), "elem_add");
    std::vector<int64_t> r(a.residues());
    for (size_t i = 0; i < r.size(); i++) {
        r[i] += b[i];
    }
    return GroupElement(a.group(), std::move(r));
}

GroupElement elem_sub(const GroupElement &a, const GroupElement &b) {
    check_same_group(a.group(), b.group(), "elem_sub");
    std::vector<int64_t> r(a.residues());
    for (size_t i = 0; i < r.size(); i++) {
        r[i] -= b[i];
    }
    return GroupElement(a.group(), std::move(r));
}

GroupElement elem_neg(const GroupElement &a) {
    std::vector<int64_t> r(a.residues());
    for (auto &v : r) {
        v = -v;
    }
    return GroupElement(a.group(), std::move(r));
}

GroupElement elem_zero(const Group &g) { return GroupElement::zero(g); }

GroupElement elem_scale(const GroupElement &a, int64_t k) {
    std::vector<int64_t> r(a.residues());
    for (size_t i = 0; i < r.size(); i++) {
        r[i] = mul_mod(r[i], mod(k, a.group().order(i)), a.group().order(i));
    }
    return GroupElement(a.group(), std::move(r));
}

int64_t elem_order(const GroupElement &a) {
    int64_t out = 1;
    for (size_t i = 0; i < a.residues().size(); i++) {
        int64_t q = a.group().order(i);
        out = lcm64(out, q / std::gcd(q, a[i]));
    }
    return out;
}

uint64_t element_index(const GroupElement &a) {
    uint64_t idx = 0;
    for (size_t i = 0; i < a.residues().size(); i++) {
        idx = idx * static_cast<uint64_t>(a.group().order(i)) + static_cast<uint64_t>(a[i]);
    }
    return idx;
}

GroupElement element_at(const Group &g, uint64_t index) {
    std::vector<int64_t> r(g.rank());
    for (size_t i = g.rank(); i-- > 0;) {
        uint64_t q = static_cast<uint64_t>(g.order(i));
        r[i] = static_cast<int64_t>(index % q);
        index /= q;
    }
    return GroupElement(g, std::move(r));
}

std::vector<GroupElement> enumerate_elements(const Group &g, uint64_t cap) {
    require(g.size() <= cap, ErrorCode::CapExceeded,
            "group " + g.literal() + " has more than " + std::to_string(cap) + " elements");
    std::vector<GroupElement> out;
    out.reserve(g.size());
    for (uint64_t k = 0; k < g.size(); k++) {
        out.push_back(element_at(g, k));
    }
    return out;
}

HomMatrix::HomMatrix(Group source, Group target, const std::vector<std::vector<int64_t>> &rows)
    : source_(std::move(source)), target_(std::move(target)) {
    require(rows.size() == target_.rank(), ErrorCode::InvalidArgument,
            "matrix has " + std::to_string(rows.size()) + " rows, target rank is " + std::to_string(target_.rank()));
    entries_.reserve(target_.rank() * source_.rank());
    for (size_t i = 0; i < rows.size(); i++) {
        require(rows[i].size() == source_.rank(), ErrorCode::InvalidArgument,
                "matrix row " + std::to_string(i) + " has wrong length");
        for (int64_t v : rows[i]) {
            entries_.push_back(mod(v, target_.order(i)));
        }
    }
}

HomMatrix::HomMatrix(Group source, Group target, std::vector<int64_t> row_major, int)
    : source_(std::move(source)), target_(std::move(target)), entries_(std::move(row_major)) {
    require(entries_.size() == source_.rank() * target_.rank(), ErrorCode::InvalidArgument, "bad matrix size");
    for (size_t i = 0; i < rows(); i++) {
        for (size_t j = 0; j < cols(); j++) {
            auto &e = entries_[i * cols() + j];
            e = mod(e, target_.order(i));
        }
    }
}

HomMatrix HomMatrix::identity(const Group &g) {
    std::vector<int64_t> e(g.rank() * g.rank(), 0);
    for (size_t i = 0; i < g.rank(); i++) {
        e[i * g.rank() + i] = 1;
    }
    return HomMatrix(g, g, std::move(e), 0);
}

HomMatrix HomMatrix::zero(const Group &source, const Group &target) {
    return HomMatrix(source, target, std::vector<int64_t>(source.rank() * target.rank(), 0), 0);
}

void HomMatrix::set(size_t i, size_t j, int64_t v) { entries_[i * cols() + j] = mod(v, target_.order(i)); }

std::vector<std::vector<int64_t>> HomMatrix::to_rows() const {
    std::vector<std::vector<int64_t>> out(rows(), std::vector<int64_t>(cols()));
    for (size_t i = 0; i < rows(); i++) {
        for (size_t j = 0; j < cols(); j++) {
            out[i][j] = at(i, j);
        }
    }
    return out;
}

GroupElement HomMatrix::column(size_t j) const {
    std::vector<int64_t> r(rows());
    for (size_t i = 0; i < rows(); i++) {
        r[i] = at(i, j);
    }
    return GroupElement(target_, std::move(r));
}

bool hom_is_valid(const HomMatrix &m) {
    for (size_t i = 0; i < m.rows(); i++) {
        for (size_t j = 0; j < m.cols(); j++) {
            if (mul_mod(m.at(i, j), m.source().order(j), m.target().order(i)) != 0) {
                return false;
            }
        }
    }
    return true;
}

GroupElement hom_apply(const HomMatrix &m, const GroupElement &a) {
    check_same_group(m.source(), a.group(), "hom_apply");
    std::vector<int64_t> r(m.rows(), 0);
    for (size_t i = 0; i < m.rows(); i++) {
        int64_t q = m.target().order(i);
        int64_t acc = 0;
        for (size_t j = 0; j < m.cols(); j++) {
            acc = add_mod(acc, mul_mod(m.at(i, j), a[j], q), q);
        }
        r[i] = acc;
    }
    return GroupElement(m.target(), std::move(r));
}

HomMatrix hom_compose(const HomMatrix &m2, const HomMatrix &m1) {
    check_same_group(m2.source(), m1.target(), "hom_compose");
    require(hom_is_valid(m1) && hom_is_valid(m2), ErrorCode::InvalidArgument,
            "hom_compose: input matrix is not a well-defined homomorphism");
    std::vector<int64_t> e(m2.rows() * m1.cols(), 0);
    for (size_t i = 0; i < m2.rows(); i++) {
        int64_t q = m2.target().order(i);
        for (size_t k = 0; k < m1.cols(); k++) {
            int64_t acc = 0;
            for (size_t j = 0; j < m2.cols(); j++) {
                acc = add_mod(acc, mul_mod(m2.at(i, j), m1.at(j, k), q), q);
            }
            e[i * m1.cols() + k] = acc;
        }
    }
    return HomMatrix(m1.source(), m2.target(), std::move(e), 0);
}

HomSolver::HomSolver(const HomMatrix &m) : source_(m.source()), target_(m.target()) {
    const size_t rows = m.rows();
    const size_t cols = m.cols();
    std::vector<Column> active;
    active.reserve(cols);
    for (size_t j = 0; j < cols; j++) {
        Column c;
        c.image.resize(rows);
        for (size_t i = 0; i < rows; i++) {
            c.image[i] = m.at(i, j);
        }
        c.coeffs.assign(cols, 0);
        c.coeffs[j] = 1;
        active.push_back(std::move(c));
    }
    auto combine = [&](const Column &a, int64_t ka, const Column &b, int64_t kb) {
        Column out;
        out.image.resize(rows);
        out.coeffs.resize(cols);
        for (size_t i = 0; i < rows; i++) {
            int64_t q = target_.order(i);
            out.image[i] = add_mod(mul_mod(a.image[i], mod(ka, q), q), mul_mod(b.image[i], mod(kb, q), q), q);
        }
        for (size_t j = 0; j < cols; j++) {
            int64_t q = source_.order(j);
            out.coeffs[j] = add_mod(mul_mod(a.coeffs[j], mod(ka, q), q), mul_mod(b.coeffs[j], mod(kb, q), q), q);
        }
        return out;
    };

    pivots_.resize(rows);
    for (size_t i = 0; i < rows; i++) {
        int64_t q = target_.order(i);
        std::optional<size_t> piv;
        for (size_t c = 0; c < active.size(); c++) {
            if (active[c].image[i] == 0) {
                continue;
            }
            if (!piv) {
                piv = c;
                continue;
            }
            Column &p = active[*piv];
            Column &o = active[c];
            int64_t a = p.image[i];
            int64_t b = o.image[i];
            auto bz = bezout(a, b);
            Column np = combine(p, bz.x, o, bz.y);
            Column no = combine(p, -(b / bz.g), o, a / bz.g);
            p = std::move(np);
            o = std::move(no);
        }
        if (!piv) {
            continue;
        }
        Column p = std::move(active[*piv]);
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(*piv));
        int64_t g = std::gcd(p.image[i], q);
        // A multiple of the pivot vanishes in row i and stays available for
        // the later rows.
        Column again = combine(p, q / g, p, 0);
        active.push_back(std::move(again));
        pivots_[i] = std::move(p);
    }
    for (auto &c : active) {
        bool nonzero = std::any_of(c.coeffs.begin(), c.coeffs.end(), [](int64_t v) { return v != 0; });
        if (nonzero) {
            rest_.push_back(std::move(c));
        }
    }
}

std::optional<GroupElement> HomSolver::preimage(const GroupElement &y) const {
    check_same_group(target_, y.group(), "HomSolver::preimage");
    std::vector<int64_t> r = y.residues();
    std::vector<int64_t> x(source_.rank(), 0);
    for (size_t i = 0; i < r.size(); i++) {
        int64_t q = target_.order(i);
        int64_t need = mod(r[i], q);
        if (!pivots_[i]) {
            if (need != 0) {
                return std::nullopt;
            }
            continue;
        }
        const Column &p = *pivots_[i];
        int64_t a = p.image[i];
        int64_t g = std::gcd(a, q);
        if (need % g != 0) {
            return std::nullopt;
        }
        int64_t sub = q / g;
        int64_t v = sub == 1 ? 0 : mul_mod(need / g, inverse_mod((a / g) % sub, sub), sub);
        for (size_t k = i; k < r.size(); k++) {
            int64_t qk = target_.order(k);
            r[k] = add_mod(r[k], -mul_mod(p.image[k], v, qk), qk);
        }
        for (size_t j = 0; j < x.size(); j++) {
            int64_t qj = source_.order(j);
            x[j] = add_mod(x[j], mul_mod(p.coeffs[j], v, qj), qj);
        }
    }
    return GroupElement(source_, std::move(x));
}

std::vector<GroupElement> HomSolver::kernel() const {
    std::vector<GroupElement> out;
    for (const auto &c : rest_) {
        GroupElement e(source_, c.coeffs);
        if (!e.is_zero()) {
            out.push_back(std::move(e));
        }
    }
    return out;
}

bool HomSolver::surjective() const {
    for (size_t i = 0; i < pivots_.size(); i++) {
        if (!pivots_[i] || std::gcd(pivots_[i]->image[i], target_.order(i)) != 1) {
            return false;
        }
    }
    return true;
}

uint64_t HomSolver::image_order() const {
    uint64_t out = 1;
    for (size_t i = 0; i < pivots_.size(); i++) {
        if (!pivots_[i]) {
            continue;
        }
        int64_t q = target_.order(i);
        uint64_t f = static_cast<uint64_t>(q / std::gcd(pivots_[i]->image[i], q));
        if (out > std::numeric_limits<uint64_t>::max() / f) {
            return std::numeric_limits<uint64_t>::max();
        }
        out *= f;
    }
    return out;
}

bool is_automorphism(const HomMatrix &m) {
    if (m.source() != m.target() || !hom_is_valid(m)) {
        return false;
    }
    // Same finite cardinality on both sides, so surjective == bijective.
    return HomSolver(m).surjective();
}

HomMatrix invert_automorphism(const HomMatrix &m) {
    require(m.source() == m.target(), ErrorCode::InvalidArgument, "invert_automorphism needs an endomorphism");
    require(hom_is_valid(m), ErrorCode::InvalidArgument, "invert_automorphism: matrix is not a homomorphism");
    HomSolver solver(m);
    const Group &g = m.source();
    std::vector<int64_t> e(g.rank() * g.rank(), 0);
    for (size_t i = 0; i < g.rank(); i++) {
        auto basis = GroupElement::basis(g, i);
        auto pre = solver.preimage(basis);
        if (!pre) {
            throw NotInvertibleError("homomorphism is not invertible: basis element " + std::to_string(i) +
                                         " has no preimage",
                                     basis.residues());
        }
        for (size_t j = 0; j < g.rank(); j++) {
            e[j * g.rank() + i] = (*pre)[j];
        }
    }
    return HomMatrix(g, g, std::move(e), 0);
}

HomMatrix hom_direct_sum(const HomMatrix &a, const HomMatrix &b) {
    Group src = group_product(a.source(), b.source());
    Group tgt = group_product(a.target(), b.target());
    HomMatrix out = HomMatrix::zero(src, tgt);
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t j = 0; j < a.cols(); j++) {
            out.set(i, j, a.at(i, j));
        }
    }
    for (size_t i = 0; i < b.rows(); i++) {
        for (size_t j = 0; j < b.cols(); j++) {
            out.set(a.rows() + i, a.cols() + j, b.at(i, j));
        }
    }
    return out;
}

HomMatrix dual_hom(const HomMatrix &m) {
    require(hom_is_valid(m), ErrorCode::InvalidArgument, "dual_hom: matrix is not a homomorphism");
    // (chi o m)_j = q_j * sum_i chi_i m_ij / q'_i, each term integral by validity.
    HomMatrix out = HomMatrix::zero(m.target(), m.source());
    for (size_t j = 0; j < m.cols(); j++) {
        int64_t qj = m.source().order(j);
        for (size_t i = 0; i < m.rows(); i++) {
            int64_t qi = m.target().order(i);
            __int128 num = static_cast<__int128>(m.at(i, j)) * qj;
            out.set(j, i, static_cast<int64_t>((num / qi) % qj));
        }
    }
    return out;
}

namespace {

// Builds the isomorphism that moves the p-primary part of input factor j to
// output factor slot[j][p]. Output factors are CRT-recombined prime powers.
Isomorphism primary_regroup(const Group &in, const Group &out,
                            const std::vector<std::map<int64_t, size_t>> &slot) {
    HomMatrix fwd = HomMatrix::zero(in, out);
    HomMatrix bwd = HomMatrix::zero(out, in);
    for (size_t j = 0; j < in.rank(); j++) {
        for (const auto &[p, k] : slot[j]) {
            fwd.set(k, j, fwd.at(k, j) + primary_idempotent(out.order(k), p));
            bwd.set(j, k, bwd.at(j, k) + primary_idempotent(in.order(j), p));
        }
    }
    return Isomorphism{fwd, bwd};
}

}  // namespace

std::pair<Group, Isomorphism> canonicalize(const Group &g) {
    // prime -> list of (exponent, source factor)
    std::map<int64_t, std::vector<std::pair<int, size_t>>> parts;
    for (size_t j = 0; j < g.rank(); j++) {
        for (auto [p, e] : factorize(g.order(j))) {
            parts[p].emplace_back(e, j);
        }
    }
    size_t nout = 0;
    for (auto &[p, list] : parts) {
        std::stable_sort(list.begin(), list.end(), [](auto &a, auto &b) { return a.first > b.first; });
        nout = std::max(nout, list.size());
    }
    std::vector<int64_t> orders(nout, 1);
    std::vector<std::map<int64_t, size_t>> slot(g.rank());
    for (auto &[p, list] : parts) {
        for (size_t k = 0; k < list.size(); k++) {
            int64_t pk = 1;
            for (int t = 0; t < list[k].first; t++) {
                pk *= p;
            }
            orders[k] *= pk;
            slot[list[k].second][p] = k;
        }
    }
    Group out(orders);
    return {out, primary_regroup(g, out, slot)};
}

std::pair<Group, Isomorphism> primary_decomposition(const Group &g) {
    std::vector<int64_t> orders;
    std::vector<std::map<int64_t, size_t>> slot(g.rank());
    for (size_t j = 0; j < g.rank(); j++) {
        for (auto [p, e] : factorize(g.order(j))) {
            int64_t pk = 1;
            for (int t = 0; t < e; t++) {
                pk *= p;
            }
            slot[j][p] = orders.size();
            orders.push_back(pk);
        }
    }
    Group out(orders);
    return {out, primary_regroup(g, out, slot)};
}

std::vector<int64_t> to_embedded(const GroupElement &a) {
    int64_t e = a.group().exponent();
    std::vector<int64_t> out(a.residues().size());
    for (size_t i = 0; i < out.size(); i++) {
        out[i] = a[i] * (e / a.group().order(i));
    }
    return out;
}

GroupElement from_embedded(const Group &g, const std::vector<int64_t> &values) {
    require(values.size() == g.rank(), ErrorCode::InvalidArgument, "embedded vector has wrong length");
    int64_t e = g.exponent();
    std::vector<int64_t> r(values.size());
    for (size_t i = 0; i < r.size(); i++) {
        int64_t step = e / g.order(i);
        int64_t v = mod(values[i], e);
        require(v % step == 0, ErrorCode::InvalidArgument,
                "embedded value " + std::to_string(values[i]) + " is not a multiple of " + std::to_string(step));
        r[i] = v / step;
    }
    return GroupElement(g, std::move(r));
}

std::vector<std::vector<int64_t>> hom_to_embedded(const HomMatrix &m) {
    require(m.source() == m.target(), ErrorCode::InvalidArgument, "embedded convention is for endomorphisms");
    const Group &g = m.source();
    std::vector<std::vector<int64_t>> out(m.rows(), std::vector<int64_t>(m.cols()));
    for (size_t i = 0; i < m.rows(); i++) {
        for (size_t j = 0; j < m.cols(); j++) {
            // E = N * q_j / q_i, integral because N * q_j == 0 mod q_i.
            __int128 v = static_cast<__int128>(m.at(i, j)) * g.order(j);
            out[i][j] = mod(static_cast<int64_t>(v / g.order(i)), g.exponent());
        }
    }
    return out;
}

HomMatrix hom_from_embedded(const Group &g, const std::vector<std::vector<int64_t>> &rows) {
    require(rows.size() == g.rank(), ErrorCode::InvalidArgument, "embedded matrix has wrong row count");
    HomMatrix out = HomMatrix::zero(g, g);
    for (size_t i = 0; i < g.rank(); i++) {
        require(rows[i].size() == g.rank(), ErrorCode::InvalidArgument, "embedded matrix row has wrong length");
        for (size_t j = 0; j < g.rank(); j++) {
            __int128 v = static_cast<__int128>(mod(rows[i][j], g.exponent())) * g.order(i);
            require(v % g.order(j) == 0, ErrorCode::InvalidArgument,
                    "embedded entry (" + std::to_string(i) + "," + std::to_string(j) +
                        ") does not describe a map between the embedded factors");
            out.set(i, j, static_cast<int64_t>(v / g.order(j)));
        }
    }
    return out;
}

}  // namespace gcliff
