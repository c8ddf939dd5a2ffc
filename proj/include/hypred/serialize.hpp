#pragma once

// Machine-readable records. Rationals are always "num/den" strings.

#include <json.hpp>

#include "hypred/expansion.hpp"
#include "hypred/mellin_barnes.hpp"
#include "hypred/parametrization.hpp"
#include "hypred/reduction.hpp"

namespace hypred {

using Json = nlohmann::ordered_json;

Json encode(const Rat& x);
Rat decode_rat(const Json& j);

Json encode(const MPoly& p);
MPoly decode_mpoly(const Json& j);

Json encode(const QEps& x);
QEps decode_qeps(const Json& j);

/// {"num": [z^0, z^1, ...], "den": [...]}, coefficients in Q(eps).
Json encode(const RatFunc& r);
RatFunc decode_ratfunc(const Json& j);

Json encode(const EpsLin& x);
Json encode(const SymEpsLin& x);
Json encode(const HyperFn& f);
Json encode(const SymHyperFn& f);
/// Accepts either encoding; eps parts may be symbolic.
SymHyperFn decode_hyper(const Json& j);

Json encode(const LinearForm& f);
Json encode(const MBRepr& m);
Json encode(const FormHyper& f);
Json encode(const HyperSum& h);

Json encode(const PolyLogExpr& e);
Json encode(const SymPolyLogExpr& e);
PolyLogExpr decode_polylog(const Json& j);
SymPolyLogExpr decode_sym_polylog(const Json& j);

Json encode(const VerifyOutcome& v);

Json encode(const ReductionResult& r);
ReductionResult decode_reduction(const Json& j);

Json encode(const HyperFn& f, const Expansion& e);
Json encode(const SymHyperFn& f, const SymExpansion& e);

Json encode(const TriangularSystem& s);
Json encode(const FactorizationReport& r);
Json encode(const ThreeF2Report& r);
Json encode(const F3Report& r);
Json encode(const ExceptionalReport& r);

/// Human-readable rational function in z with Q(eps) coefficients.
std::string to_string(const RatFunc& r);

}  // namespace hypred
