#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gvm {

/// Modulus used to mark an infinite cyclic factor (a copy of Z).
inline constexpr std::int64_t infinite_modulus = 0;

/// A finitely generated Abelian group, written as an ordered product of cyclic
/// factors Z_m (m >= 2) and Z. Groups are structural: Z2xZ3 and Z6 are distinct
/// specs even though they are isomorphic.
class GroupSpec {
public:
    explicit GroupSpec(std::vector<std::int64_t> moduli);

    auto moduli() const -> const std::vector<std::int64_t> & { return _moduli; }
    auto rank() const -> std::size_t { return _moduli.size(); }
    auto is_finite() const -> bool;

    /// Number of elements; nullopt when some factor is Z.
    auto order() const -> std::optional<std::int64_t>;

    friend auto operator==(const GroupSpec &, const GroupSpec &) -> bool = default;

private:
    std::vector<std::int64_t> _moduli;
};

/// Component vector of an element. Finite components are kept in [0, m).
struct GroupElement {
    std::vector<std::int64_t> components;

    friend auto operator<=>(const GroupElement &, const GroupElement &) = default;
};

/// Element order; nullopt means infinite order.
using ElementOrder = std::optional<std::int64_t>;

auto parse_spec(std::string_view text) -> GroupSpec;
auto format_spec(const GroupSpec & spec) -> std::string;

/// Builds an element, reducing finite components (negative values wrap).
auto make_element(const GroupSpec & spec, std::vector<std::int64_t> components) -> GroupElement;
auto parse_element(const GroupSpec & spec, std::string_view text) -> GroupElement;
auto format_element(const GroupElement & x) -> std::string;

auto conforms(const GroupSpec & spec, const GroupElement & x) -> bool;
auto zero(const GroupSpec & spec) -> GroupElement;
auto is_zero(const GroupElement & x) -> bool;

auto add(const GroupSpec & spec, const GroupElement & x, const GroupElement & y) -> GroupElement;
auto neg(const GroupSpec & spec, const GroupElement & x) -> GroupElement;
auto sub(const GroupSpec & spec, const GroupElement & x, const GroupElement & y) -> GroupElement;
auto scalar_mul(const GroupSpec & spec, std::int64_t k, const GroupElement & x) -> GroupElement;

auto order(const GroupSpec & spec, const GroupElement & x) -> ElementOrder;

/// True iff d * x = 0 for every x, i.e. every factor is finite and divides d.
auto exponent_divides(const GroupSpec & spec, std::int64_t d) -> bool;

/// All elements of a finite group in canonical (lexicographic) order.
auto enumerate_elements(const GroupSpec & spec, bool include_zero) -> std::vector<GroupElement>;

/// Successor in canonical order. Infinite components run 0, 1, -1, 2, -2, ...
/// and never carry, so for groups with a Z factor only a prefix of the group
/// is reachable from zero; every element after the first carry into a Z
/// component has infinite order.
auto next_canonical(const GroupSpec & spec, const GroupElement & x) -> std::optional<GroupElement>;

/// First element (starting from zero) in canonical order satisfying pred,
/// examining at most step_limit elements.
auto first_canonical(const GroupSpec & spec, const std::function<bool(const GroupElement &)> & pred,
    std::int64_t step_limit = std::int64_t{1} << 22) -> std::optional<GroupElement>;

/// First element of exactly the given finite order, searching only the torsion
/// part (all Z components zero) in canonical order.
auto first_of_order(const GroupSpec & spec, std::int64_t d) -> std::optional<GroupElement>;

/// One spec per isomorphism class of Abelian groups of the given order, in
/// invariant factor form m_1 | m_2 | ... (e.g. Z2xZ4, never Z4xZ2 or Z2xZ2xZ2
/// twice), ordered by number of factors and then lexicographically.
auto groups_of_order(std::int64_t n) -> std::vector<GroupSpec>;

}
