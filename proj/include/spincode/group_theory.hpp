#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spincode/su2.hpp"

namespace spincode {

enum class GroupLabel { TwoT, TwoO, TwoI };

GroupLabel parse_group_label(const std::string& s);
std::string group_label_name(GroupLabel g);

struct ConjugacyClass {
    std::string label;          // table convention, e.g. "8a"
    double theta = 0;           // rotation angle shared by all members
    std::size_t size = 0;
    std::vector<std::size_t> members;  // indices into FiniteSubgroup::elements
};

/// Character table transcribed as exact symbolic constants evaluated to
/// double precision, validated by orthogonality at group construction.
struct CharacterTable {
    std::vector<std::string> class_labels;
    std::vector<double> class_thetas;
    std::vector<std::size_t> class_sizes;
    std::vector<std::string> irrep_labels;
    std::vector<std::size_t> irrep_dims;
    std::vector<std::vector<cdouble>> values;  // [irrep][class]

    std::size_t n_classes() const { return class_labels.size(); }
    std::size_t n_irreps() const { return irrep_labels.size(); }
    std::size_t irrep_index(const std::string& label) const;
    std::size_t class_index(const std::string& label) const;
};

struct FiniteSubgroup {
    GroupLabel label;
    std::vector<GroupElement> elements;
    std::vector<ConjugacyClass> classes;       // ordered to match table columns
    std::vector<std::size_t> class_of_element; // element index -> class index
    CharacterTable table;

    std::size_t order() const { return elements.size(); }
    std::optional<std::size_t> find_element(const GroupElement& g, double tol = 1e-9) const;
};

/// Closure of the generator set under quaternion multiplication. Element
/// counts are checked against the known group orders (24 / 48 / 120), the
/// character table validated by row orthonormality, and the conjugacy
/// classes matched to the table labels.
FiniteSubgroup enumerate_group(GroupLabel label);

/// Conjugation orbits, matched to table labels by (size, theta) signature.
/// The 2T pairs 3a/3b and 6a/6b share signatures and are anchored to the
/// canonical representatives (-1-i sx-i sy-i sz)/2 for 3a and its negative
/// for 6a.
std::vector<ConjugacyClass> classify(const FiniteSubgroup& group);

/// (1/|G|) sum over classes of |[g]| chi1([g])^* chi2([g])
cdouble char_inner_product(const std::vector<cdouble>& chi1,
                           const std::vector<cdouble>& chi2,
                           const FiniteSubgroup& group);

/// Character of the restricted spin representation as a class function,
/// computed by the recursion chi_d = chi_2 * chi_{d-1} - chi_{d-2} and
/// cross-checked against the closed-form Weyl value on every class.
std::vector<cdouble> reducible_character(SpinJ spin, const FiniteSubgroup& group);

/// Branching multiplicity of the irrep inside the spin-j representation.
int multiplicity(SpinJ spin, const FiniteSubgroup& group, const std::string& irrep_label);

struct MultiplicityTable {
    std::vector<std::string> irrep_labels;
    std::vector<std::size_t> dims;                 // 1 .. max_dim
    std::vector<std::vector<int>> mults;           // [dim-1][irrep]
    std::size_t period = 0;                        // 12 / 24 / 60
    std::vector<int> period_increment;             // per-irrep increase per period
};

MultiplicityTable multiplicity_table(const FiniteSubgroup& group, std::size_t max_dim);

}  // namespace spincode
