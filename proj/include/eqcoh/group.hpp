// Finite groups as dense multiplication tables with labeled elements, plus
// subgroup extraction and sign characters.  Orders in this project are at
// most 12, so constant-time table lookup beats any cleverness.
#pragma once

#include <string>
#include <utility>
#include <vector>

namespace eqc {

struct FinGroup {
    std::vector<std::vector<int>> table;  // table[g][h] = g*h
    std::vector<int> inv;
    std::vector<std::string> labels;
    int id = 0;

    int order() const { return static_cast<int>(table.size()); }
    int mult(int g, int h) const { return table[g][h]; }
    int inverse(int g) const { return inv[g]; }
    // g^e for e >= 0
    int power(int g, int e) const;
    const std::string& label(int g) const { return labels[g]; }
    // index of the element with the given label; throws if absent
    int element(const std::string& label) const;
    bool is_abelian() const;
    // full axiom check: associativity, identity, inverses, unique labels
    void validate() const;
};

FinGroup trivial_group();
// Elements 1, C, C2, ..., C{n-1}.
FinGroup cyclic_group(int n);
// Order 2n: rotations C^a plus reflections s1..sn with s_l = C^(l-1) s1,
// subject to s1^2 = 1 and s1 C s1 = C^{-1}.
FinGroup dihedral_group(int n);

bool is_subgroup(const FinGroup& G, const std::vector<int>& elements);
// Subgroup on the given (closed) element set: the new group plus the
// inclusion map new-index -> parent-index.  Labels are inherited.
std::pair<FinGroup, std::vector<int>> subgroup_of(const FinGroup& G,
                                                  std::vector<int> elements);

// f[h] = image in G of element h of H; checks f(ab) = f(a)f(b).
bool is_homomorphism(const FinGroup& H, const FinGroup& G,
                     const std::vector<int>& f);

// Multiplicative character with values in {+1, -1}.
struct SignHom {
    const FinGroup* G = nullptr;
    std::vector<int> eps;

    int operator()(int g) const { return eps[g]; }
    bool valid() const;
    bool is_trivial() const;
    // elements mapping to +1 (always a subgroup when valid)
    std::vector<int> kernel_elements() const;
};

SignHom trivial_sign(const FinGroup& G);
// For cyclic_group(n) with n even: the character sending C to -1.
SignHom rotation_sign(const FinGroup& cyclic);
// For dihedral_group(n): the character with the given values on C and s1.
// c_val = -1 requires n even.  (+1,-1) is the determinant character.
SignHom dihedral_sign(const FinGroup& dihedral, int c_val, int s_val);

// Parse {"elements": [labels...], "table": [[indices...]...]} and validate
// the group axioms.  Throws std::invalid_argument with a description on any
// schema or axiom violation.
FinGroup group_from_json(const std::string& json_text);
FinGroup group_from_json_file(const std::string& path);

}  // namespace eqc
