#include <gvm/errors.hh>
#include <gvm/transfer.hh>

#include <cstdlib>

using std::int64_t;
using std::vector;

namespace gvm {

ModularTransfer::ModularTransfer(vector<int64_t> coefficients) :
    _coefficients(std::move(coefficients))
{
    int64_t largest = 0;
    for (auto k : _coefficients) {
        if (k == 0)
            throw PreconditionError("a Z-magic labeling has no zero labels");
        largest = std::max(largest, std::abs(k));
    }
    _threshold = std::max<int64_t>(largest + 1, 2);
}

auto ModularTransfer::at(int64_t m) const -> Labeling
{
    if (m < _threshold)
        throw DomainError("modulus " + std::to_string(m) + " is below the transfer threshold "
            + std::to_string(_threshold));
    GroupSpec spec{vector<int64_t>{m}};
    Labeling l{spec, {}};
    for (auto k : _coefficients)
        l.values.push_back(make_element(spec, {k}));
    return l;
}

auto transfer_int_to_mod(const MagicCertificate & integer_certificate) -> ModularTransfer
{
    auto & spec = integer_certificate.labeling.spec;
    if (spec != GroupSpec{vector<int64_t>{infinite_modulus}})
        throw PreconditionError("transfer needs a certificate over Z, got " + format_spec(spec));
    vector<int64_t> coefficients;
    for (auto & x : integer_certificate.labeling.values)
        coefficients.push_back(x.components.at(0));
    return ModularTransfer{std::move(coefficients)};
}

auto symmetric_residue(int64_t r, int64_t p) -> int64_t
{
    r %= p;
    if (r < 0)
        r += p;
    return 2 * r > p ? r - p : r;
}

auto lift_mod_to_int(const Graph & g, const MagicCertificate & cyclic_certificate) -> IntegerLift
{
    auto & source = cyclic_certificate.labeling;
    if (source.spec.rank() != 1 || ! source.spec.is_finite())
        throw PreconditionError("lifting needs a labeling over a single finite cyclic group, got "
            + format_spec(source.spec));
    if (! std::holds_alternative<MagicCertificate>(verify_magic(g, source)))
        throw PreconditionError("the Z_p labeling to lift is not magic on this graph");

    auto p = source.spec.moduli()[0];
    GroupSpec integers{vector<int64_t>{infinite_modulus}};
    Labeling candidate{integers, {}};
    for (auto & x : source.values)
        candidate.values.push_back(GroupElement{{symmetric_residue(x.components[0], p)}});
    auto verdict = verify_magic(g, candidate);
    return IntegerLift{std::move(candidate), std::move(verdict)};
}

}
