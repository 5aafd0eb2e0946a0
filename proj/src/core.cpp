#include "wbk/core.hpp"

#include <utility>

namespace wbk {

OpTable OpTable::transposed() const {
  OpTable t(n_);
  for (Element a = 0; a < n_; ++a)
    for (Element b = 0; b < n_; ++b) t.at(a, b) = (*this)(b, a);
  return t;
}

RawTable OpTable::to_raw() const {
  RawTable raw(n_, std::vector<std::int64_t>(n_));
  for (Element a = 0; a < n_; ++a)
    for (Element b = 0; b < n_; ++b) raw[a][b] = (*this)(a, b);
  return raw;
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::NotClosed: return "NotClosed";
    case ViolationKind::NotAssociative: return "NotAssociative";
    case ViolationKind::NoIdentity: return "NoIdentity";
    case ViolationKind::NoInverse: return "NoInverse";
    case ViolationKind::NotInverse: return "NotInverse";
    case ViolationKind::NotClifford: return "NotClifford";
    case ViolationKind::NotIdempotent: return "NotIdempotent";
    case ViolationKind::NotCommutative: return "NotCommutative";
    case ViolationKind::GroupViolation: return "GroupViolation";
    case ViolationKind::CliffordViolation: return "CliffordViolation";
    case ViolationKind::IdentityMismatch: return "IdentityMismatch";
    case ViolationKind::IdempotentSetMismatch: return "IdempotentSetMismatch";
    case ViolationKind::CompatibilityViolation: return "CompatibilityViolation";
    case ViolationKind::SecondAxiomViolation: return "SecondAxiomViolation";
    case ViolationKind::OrderMismatch: return "OrderMismatch";
    case ViolationKind::NotAHom: return "NotAHom";
    case ViolationKind::MissingHom: return "MissingHom";
    case ViolationKind::CompositionViolation: return "CompositionViolation";
    case ViolationKind::EquivarianceViolation: return "EquivarianceViolation";
    case ViolationKind::NotAnIdeal: return "NotAnIdeal";
    case ViolationKind::NotAnnihilatorSeries: return "NotAnnihilatorSeries";
    case ViolationKind::NoPeriod: return "NoPeriod";
    case ViolationKind::OrderTooLarge: return "OrderTooLarge";
    case ViolationKind::OppositeNotWeakBrace: return "OppositeNotWeakBrace";
    case ViolationKind::InternalInvariantBroken: return "InternalInvariantBroken";
    case ViolationKind::SumCircMismatch: return "SumCircMismatch";
    case ViolationKind::ParseError: return "ParseError";
    case ViolationKind::UnknownName: return "UnknownName";
    case ViolationKind::UsageError: return "UsageError";
  }
  return "Unknown";
}

std::string Violation::describe() const {
  std::string out(to_string(kind));
  if (cause) {
    out += '[';
    out += to_string(*cause);
    out += ']';
  }
  out += '(';
  for (std::size_t i = 0; i < witness.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(witness[i]);
  }
  out += ')';
  if (!context.empty()) {
    out += ": ";
    out += context;
  }
  return out;
}

ViolationError::ViolationError(Violation v)
    : std::runtime_error(v.describe()), violation_(std::move(v)) {}

void fail(ViolationKind kind, std::vector<Element> witness, std::string context) {
  throw ViolationError(Violation{kind, std::move(witness), std::move(context), std::nullopt});
}

OpTable checked_table(const RawTable& raw) {
  const std::size_t n = raw.size();
  if (n == 0) fail(ViolationKind::NotClosed, {}, "empty table");
  OpTable t(n);
  for (Element a = 0; a < n; ++a) {
    if (raw[a].size() != n) fail(ViolationKind::NotClosed, {a}, "row length differs from order");
    for (Element b = 0; b < n; ++b) {
      const auto v = raw[a][b];
      if (v < 0 || static_cast<std::uint64_t>(v) >= n)
        fail(ViolationKind::NotClosed, {a, b}, "entry out of range");
      t.at(a, b) = static_cast<Element>(v);
    }
  }
  return t;
}

}  // namespace wbk
