#include "spincode/group_theory.hpp"

#include <cmath>
#include <map>
#include <set>

namespace spincode {

GroupLabel parse_group_label(const std::string& s) {
    if (s == "2T") return GroupLabel::TwoT;
    if (s == "2O") return GroupLabel::TwoO;
    if (s == "2I") return GroupLabel::TwoI;
    throw std::invalid_argument("unknown group label: " + s + " (expected 2T, 2O, or 2I)");
}

std::string group_label_name(GroupLabel g) {
    switch (g) {
        case GroupLabel::TwoT: return "2T";
        case GroupLabel::TwoO: return "2O";
        case GroupLabel::TwoI: return "2I";
    }
    throw std::logic_error("bad group label");
}

std::size_t CharacterTable::irrep_index(const std::string& label) const {
    for (std::size_t i = 0; i < irrep_labels.size(); ++i)
        if (irrep_labels[i] == label) return i;
    throw std::invalid_argument("unknown irrep label: " + label);
}

std::size_t CharacterTable::class_index(const std::string& label) const {
    for (std::size_t i = 0; i < class_labels.size(); ++i)
        if (class_labels[i] == label) return i;
    throw std::invalid_argument("unknown class label: " + label);
}

std::optional<std::size_t> FiniteSubgroup::find_element(const GroupElement& g, double tol) const {
    for (std::size_t i = 0; i < elements.size(); ++i)
        if (elements[i].approx_equal(g, tol)) return i;
    return std::nullopt;
}

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<GroupElement> closure(const std::vector<GroupElement>& gens, std::size_t expected) {
    std::vector<GroupElement> els;
    els.push_back(GroupElement::one());
    auto find = [&](const GroupElement& q) {
        for (const auto& e : els)
            if (e.approx_equal(q)) return true;
        return false;
    };
    for (const auto& g : gens)
        if (!find(g)) els.push_back(g);
    bool grew = true;
    while (grew) {
        grew = false;
        const std::size_t n = els.size();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                GroupElement p = els[i] * els[j];
                if (!find(p)) {
                    els.push_back(p);
                    grew = true;
                    if (els.size() > 2 * expected)
                        throw std::runtime_error("group closure exceeded twice the expected order");
                }
            }
    }
    if (els.size() != expected)
        throw std::runtime_error("group closure produced " + std::to_string(els.size()) +
                                 " elements, expected " + std::to_string(expected));
    return els;
}

std::vector<GroupElement> generators_for(GroupLabel label) {
    const double s2 = std::sqrt(0.5);
    switch (label) {
        case GroupLabel::TwoO:
            // phase gate S (pi/2 about z) and Hadamard H (pi about (x+z)/sqrt 2)
            return {{s2, 0, 0, s2}, {0, s2, 0, s2}};
        case GroupLabel::TwoT:
            // S^2 (pi about z) and the order-6 quaternion (1 - i sx - i sy - i sz)/2
            return {{0, 0, 0, 1}, {0.5, 0.5, 0.5, 0.5}};
        case GroupLabel::TwoI: {
            // orientation with z a fivefold axis: 2pi/5 rotation about z plus a
            // pi rotation about the adjacent twofold axis (1, 0, phi)/sqrt(2 + phi)
            const double phi = 0.5 * (1.0 + std::sqrt(5.0));
            const double nn = std::sqrt(2.0 + phi);
            return {{std::cos(kPi / 5), 0, 0, std::sin(kPi / 5)}, {0, 1.0 / nn, 0, phi / nn}};
        }
    }
    throw std::logic_error("bad group label");
}

std::size_t expected_order(GroupLabel label) {
    switch (label) {
        case GroupLabel::TwoT: return 24;
        case GroupLabel::TwoO: return 48;
        case GroupLabel::TwoI: return 120;
    }
    throw std::logic_error("bad group label");
}

CharacterTable table_for(GroupLabel label) {
    CharacterTable t;
    const double r2 = std::sqrt(2.0);
    const double r5 = std::sqrt(5.0);
    auto ex = [](int k) { return std::polar(1.0, k * kPi / 3.0); };  // e^{i k pi/3}
    switch (label) {
        case GroupLabel::TwoT:
            t.class_labels = {"1", "2", "3a", "3b", "4", "6a", "6b"};
            t.class_thetas = {0, 2 * kPi, 4 * kPi / 3, 4 * kPi / 3, kPi, 2 * kPi / 3, 2 * kPi / 3};
            t.class_sizes = {1, 1, 4, 4, 6, 4, 4};
            t.irrep_labels = {"rho1", "rho2", "rho3", "rho4", "rho5", "rho6", "rho7"};
            t.irrep_dims = {1, 1, 1, 2, 2, 2, 3};
            t.values = {
                {1, 1, 1, 1, 1, 1, 1},
                {1, 1, ex(4), ex(2), 1, ex(4), ex(2)},
                {1, 1, ex(2), ex(4), 1, ex(2), ex(4)},
                {2, -2, -1, -1, 0, 1, 1},
                {2, -2, ex(5), ex(1), 0, ex(2), ex(4)},
                {2, -2, ex(1), ex(5), 0, ex(4), ex(2)},
                {3, 3, 0, 0, -1, 0, 0}};
            break;
        case GroupLabel::TwoO:
            t.class_labels = {"1", "2", "3", "4a", "4b", "6", "8a", "8b"};
            t.class_thetas = {0, 2 * kPi, 4 * kPi / 3, kPi, kPi, 2 * kPi / 3, kPi / 2, 3 * kPi / 2};
            t.class_sizes = {1, 1, 8, 6, 12, 8, 6, 6};
            t.irrep_labels = {"rho1", "rho2", "rho3", "rho4", "rho5", "rho6", "rho7", "rho8"};
            t.irrep_dims = {1, 1, 2, 2, 2, 3, 3, 4};
            t.values = {
                {1, 1, 1, 1, 1, 1, 1, 1},
                {1, 1, 1, 1, -1, 1, -1, -1},
                {2, 2, -1, 2, 0, -1, 0, 0},
                {2, -2, -1, 0, 0, 1, r2, -r2},
                {2, -2, -1, 0, 0, 1, -r2, r2},
                {3, 3, 0, -1, -1, 0, 1, 1},
                {3, 3, 0, -1, 1, 0, -1, -1},
                {4, -4, 1, 0, 0, -1, 0, 0}};
            break;
        case GroupLabel::TwoI:
            t.class_labels = {"1", "2", "3", "4", "5a", "5b", "6", "10a", "10b"};
            t.class_thetas = {0, 2 * kPi, 4 * kPi / 3, kPi, 4 * kPi / 5, 8 * kPi / 5,
                              2 * kPi / 3, 2 * kPi / 5, 6 * kPi / 5};
            t.class_sizes = {1, 1, 20, 30, 12, 12, 20, 12, 12};
            t.irrep_labels = {"rho1", "rho2", "rho3", "rho4", "rho5", "rho6", "rho7", "rho8", "rho9"};
            t.irrep_dims = {1, 2, 2, 3, 3, 4, 4, 5, 6};
            t.values = {
                {1, 1, 1, 1, 1, 1, 1, 1, 1},
                {2, -2, -1, 0, (-1 + r5) / 2, (-1 - r5) / 2, 1, (1 + r5) / 2, (1 - r5) / 2},
                {2, -2, -1, 0, (-1 - r5) / 2, (-1 + r5) / 2, 1, (1 - r5) / 2, (1 + r5) / 2},
                {3, 3, 0, -1, (1 - r5) / 2, (1 + r5) / 2, 0, (1 + r5) / 2, (1 - r5) / 2},
                {3, 3, 0, -1, (1 + r5) / 2, (1 - r5) / 2, 0, (1 - r5) / 2, (1 + r5) / 2},
                {4, 4, 1, 0, -1, -1, 1, -1, -1},
                {4, -4, 1, 0, -1, -1, -1, 1, 1},
                {5, 5, -1, 1, 0, 0, -1, 0, 0},
                {6, -6, 0, 0, 1, 1, 0, -1, -1}};
            break;
    }
    return t;
}

void validate_table(const CharacterTable& t, std::size_t order) {
    std::size_t dimsq = 0;
    for (std::size_t r = 0; r < t.n_irreps(); ++r) dimsq += t.irrep_dims[r] * t.irrep_dims[r];
    if (dimsq != order) throw std::logic_error("character table: sum of squared dims != |G|");
    for (std::size_t r = 0; r < t.n_irreps(); ++r)
        for (std::size_t s = 0; s < t.n_irreps(); ++s) {
            cdouble ip = 0;
            for (std::size_t c = 0; c < t.n_classes(); ++c)
                ip += static_cast<double>(t.class_sizes[c]) *
                      std::conj(t.values[r][c]) * t.values[s][c];
            ip /= static_cast<double>(order);
            const double want = (r == s) ? 1.0 : 0.0;
            if (std::abs(ip - want) > 1e-10)
                throw std::logic_error("character table rows not orthonormal");
        }
}

}  // namespace

std::vector<ConjugacyClass> classify(const FiniteSubgroup& group) {
    const auto& els = group.elements;
    const std::size_t n = els.size();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<std::size_t>> orbits;
    for (std::size_t i = 0; i < n; ++i) {
        if (seen[i]) continue;
        std::set<std::size_t> orbit;
        for (const auto& g : els) {
            GroupElement c = g * els[i] * g.inverse();
            auto idx = group.find_element(c);
            if (!idx) throw std::runtime_error("classify: conjugate escaped the group");
            orbit.insert(*idx);
        }
        for (auto k : orbit) seen[k] = true;
        orbits.emplace_back(orbit.begin(), orbit.end());
    }

    const CharacterTable& t = group.table;
    std::vector<ConjugacyClass> out(t.n_classes());
    std::vector<bool> assigned(orbits.size(), false);
    // canonical anchors for the 2T signature-degenerate pairs
    const GroupElement anchor3a{-0.5, 0.5, 0.5, 0.5};
    const GroupElement anchor6a{0.5, -0.5, -0.5, -0.5};

    for (std::size_t c = 0; c < t.n_classes(); ++c) {
        std::vector<std::size_t> candidates;
        for (std::size_t o = 0; o < orbits.size(); ++o) {
            if (assigned[o]) continue;
            const double th = els[orbits[o][0]].theta();
            if (orbits[o].size() == t.class_sizes[c] && std::abs(th - t.class_thetas[c]) < 1e-6)
                candidates.push_back(o);
        }
        if (candidates.empty()) throw std::runtime_error("classify: no orbit matches class " + t.class_labels[c]);
        std::size_t pick = candidates[0];
        if (candidates.size() > 1) {
            const GroupElement* anchor = nullptr;
            if (t.class_labels[c] == "3a") anchor = &anchor3a;
            else if (t.class_labels[c] == "6a") anchor = &anchor6a;
            if (anchor != nullptr) {
                bool found = false;
                for (auto o : candidates) {
                    for (auto m : orbits[o])
                        if (els[m].approx_equal(*anchor)) { pick = o; found = true; break; }
                    if (found) break;
                }
                if (!found)
                    throw std::runtime_error("classify: canonical representative missing for class " +
                                             t.class_labels[c]);
            } else if (t.class_labels[c] != "3b" && t.class_labels[c] != "6b") {
                throw std::runtime_error("classify: ambiguous signature for class " + t.class_labels[c]);
            }
        }
        assigned[pick] = true;
        out[c] = {t.class_labels[c], t.class_thetas[c], orbits[pick].size(), orbits[pick]};
    }
    return out;
}

FiniteSubgroup enumerate_group(GroupLabel label) {
    FiniteSubgroup g;
    g.label = label;
    g.elements = closure(generators_for(label), expected_order(label));
    g.table = table_for(label);
    validate_table(g.table, g.order());
    g.classes = classify(g);
    g.class_of_element.assign(g.order(), 0);
    for (std::size_t c = 0; c < g.classes.size(); ++c)
        for (auto m : g.classes[c].members) g.class_of_element[m] = c;
    return g;
}

cdouble char_inner_product(const std::vector<cdouble>& chi1,
                           const std::vector<cdouble>& chi2,
                           const FiniteSubgroup& group) {
    if (chi1.size() != group.classes.size() || chi2.size() != group.classes.size())
        throw std::invalid_argument("char_inner_product: class function has wrong length");
    cdouble s = 0;
    for (std::size_t c = 0; c < group.classes.size(); ++c)
        s += static_cast<double>(group.classes[c].size) * std::conj(chi1[c]) * chi2[c];
    return s / static_cast<double>(group.order());
}

std::vector<cdouble> reducible_character(SpinJ spin, const FiniteSubgroup& group) {
    const std::size_t nc = group.classes.size();
    const std::size_t d = spin.dim();
    // seed chi_1 = 1 and chi_2 from the table row restricting the defining rep
    std::vector<cdouble> chi_prev(nc, 1.0), chi_cur(nc);
    std::size_t two_row = group.table.n_irreps();
    for (std::size_t r = 0; r < group.table.n_irreps(); ++r) {
        if (group.table.irrep_dims[r] != 2) continue;
        bool matches = true;
        for (std::size_t c = 0; c < nc; ++c) {
            const double w = 2.0 * std::cos(group.classes[c].theta / 2.0);
            if (std::abs(group.table.values[r][c] - w) > 1e-9) { matches = false; break; }
        }
        if (matches) { two_row = r; break; }
    }
    if (two_row == group.table.n_irreps())
        throw std::logic_error("reducible_character: no table row matches the defining rep");
    const std::vector<cdouble>& chi2 = group.table.values[two_row];

    if (d == 1) return chi_prev;
    chi_cur = chi2;
    for (std::size_t k = 3; k <= d; ++k) {
        std::vector<cdouble> next(nc);
        for (std::size_t c = 0; c < nc; ++c) next[c] = chi2[c] * chi_cur[c] - chi_prev[c];
        chi_prev = std::move(chi_cur);
        chi_cur = std::move(next);
    }
    // cross-check against the closed-form Weyl value on every class
    for (std::size_t c = 0; c < nc; ++c) {
        const double w = weyl_character(d, group.classes[c].theta);
        if (std::abs(chi_cur[c] - w) > 1e-9)
            throw std::runtime_error("reducible_character: recursion disagrees with Weyl formula");
    }
    return chi_cur;
}

int multiplicity(SpinJ spin, const FiniteSubgroup& group, const std::string& irrep_label) {
    const std::size_t r = group.table.irrep_index(irrep_label);
    const cdouble m = char_inner_product(group.table.values[r],
                                         reducible_character(spin, group), group);
    if (std::abs(m.imag()) > 1e-9 || std::abs(m.real() - std::round(m.real())) > 1e-9)
        throw std::runtime_error("multiplicity: non-integer inner product for " + irrep_label);
    return static_cast<int>(std::round(m.real()));
}

MultiplicityTable multiplicity_table(const FiniteSubgroup& group, std::size_t max_dim) {
    if (max_dim < 1) throw std::invalid_argument("multiplicity_table: max_dim must be >= 1");
    MultiplicityTable t;
    t.irrep_labels = group.table.irrep_labels;
    switch (group.label) {
        case GroupLabel::TwoT: t.period = 12; break;
        case GroupLabel::TwoO: t.period = 24; break;
        case GroupLabel::TwoI: t.period = 60; break;
    }
    auto row_for = [&](std::size_t d) {
        std::vector<int> row;
        row.reserve(t.irrep_labels.size());
        for (const auto& ir : t.irrep_labels)
            row.push_back(multiplicity(SpinJ::from_dim(d), group, ir));
        return row;
    };
    for (std::size_t d = 1; d <= max_dim; ++d) {
        t.dims.push_back(d);
        t.mults.push_back(row_for(d));
    }
    // Advancing one period adds 2 * period * dim(irrep) / |G| copies of each
    // irrep -- but only at the irrep's native parity: an irrep that is odd
    // under -1 never appears at odd dims, and vice versa.
    const std::size_t order = group.order();
    t.period_increment.assign(t.irrep_labels.size(), 0);
    for (std::size_t i = 0; i < t.irrep_labels.size(); ++i)
        t.period_increment[i] =
            static_cast<int>(2 * t.period * group.table.irrep_dims[i] / order);

    // native parity from the character at the class of -1 (angle 2 pi, size 1)
    std::vector<bool> even_native(t.irrep_labels.size(), false);
    std::size_t minus_class = group.table.n_classes();
    for (std::size_t c = 0; c < group.table.n_classes(); ++c)
        if (group.table.class_sizes[c] == 1 &&
            std::abs(group.table.class_thetas[c] - 2 * M_PI) < 1e-9)
            minus_class = c;
    if (minus_class == group.table.n_classes())
        throw std::runtime_error("multiplicity_table: class of -1 not found");
    for (std::size_t i = 0; i < t.irrep_labels.size(); ++i)
        even_native[i] = group.table.values[i][minus_class].real() < 0;

    for (std::size_t d = 1; d <= std::min<std::size_t>(max_dim, t.period); ++d) {
        std::vector<int> a = row_for(d), b = row_for(d + t.period);
        const bool even_dim = d % 2 == 0;
        for (std::size_t i = 0; i < t.irrep_labels.size(); ++i) {
            const int want = even_dim == even_native[i] ? t.period_increment[i] : 0;
            if (b[i] - a[i] != want)
                throw std::runtime_error("multiplicity_table: period check failed");
        }
    }
    return t;
}

}  // namespace spincode
