#pragma once

#include <gvm/verify.hh>

#include <cstdint>
#include <vector>

namespace gvm {

/// A Z-magic labeling with integer labels k_i read modulo m. With
/// k = max|k_i| + 1, every m >= k keeps all labels nonzero, and weight
/// equalities survive reduction, so at(m) is Z_m-magic for all such m.
class ModularTransfer {
public:
    explicit ModularTransfer(std::vector<std::int64_t> coefficients);

    auto threshold() const -> std::int64_t { return _threshold; }
    auto coefficients() const -> const std::vector<std::int64_t> & { return _coefficients; }

    /// The labeling k_i mod m over Z_m. Throws DomainError when m < threshold().
    auto at(std::int64_t m) const -> Labeling;

private:
    std::vector<std::int64_t> _coefficients;
    std::int64_t _threshold = 2;
};

/// Requires a certificate over the group Z.
auto transfer_int_to_mod(const MagicCertificate & integer_certificate) -> ModularTransfer;

/// Residue of r modulo p in (-p/2, p/2].
auto symmetric_residue(std::int64_t r, std::int64_t p) -> std::int64_t;

struct IntegerLift {
    /// Z-labeling whose labels are the symmetric residues of the Z_p labels.
    Labeling candidate;
    /// Certificate over Z, or the pair of vertices whose integer weights differ.
    MagicVerdict verdict;
};

/// Lifts a verified Z_p certificate (single cyclic factor) to a candidate
/// Z-labeling with the same small coefficients and verifies it over Z.
auto lift_mod_to_int(const Graph & g, const MagicCertificate & cyclic_certificate) -> IntegerLift;

}
