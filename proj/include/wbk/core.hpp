#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wbk {

/// Elements of every finite structure are dense 0-based indices.
using Element = std::uint32_t;

/// A total map between index sets, stored as the list of images.
using ElementMap = std::vector<Element>;

/// An unvalidated square table as it comes out of a file or a test.
using RawTable = std::vector<std::vector<std::int64_t>>;

/// Square n x n table of element indices, row-major.
class OpTable {
 public:
  OpTable() = default;
  explicit OpTable(std::size_t n, Element fill = 0) : n_(n), data_(n * n, fill) {}

  std::size_t size() const { return n_; }
  Element operator()(Element a, Element b) const { return data_[a * n_ + b]; }
  Element& at(Element a, Element b) { return data_[a * n_ + b]; }

  OpTable transposed() const;
  RawTable to_raw() const;

  friend bool operator==(const OpTable&, const OpTable&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Element> data_;
};

enum class ViolationKind {
  NotClosed,
  NotAssociative,
  NoIdentity,
  NoInverse,
  NotInverse,
  NotClifford,
  NotIdempotent,
  NotCommutative,
  GroupViolation,
  CliffordViolation,
  IdentityMismatch,
  IdempotentSetMismatch,
  CompatibilityViolation,
  SecondAxiomViolation,
  OrderMismatch,
  NotAHom,
  MissingHom,
  CompositionViolation,
  EquivarianceViolation,
  NotAnIdeal,
  NotAnnihilatorSeries,
  NoPeriod,
  OrderTooLarge,
  OppositeNotWeakBrace,
  InternalInvariantBroken,
  SumCircMismatch,
  ParseError,
  UnknownName,
  UsageError,
};

std::string_view to_string(ViolationKind kind);

/// A failed axiom or contract together with the lexicographically smallest
/// witness. `cause` is set when the violation wraps one found in a
/// component (for example the additive group of a skew brace).
struct Violation {
  ViolationKind kind;
  std::vector<Element> witness;
  std::string context;
  std::optional<ViolationKind> cause;

  std::string describe() const;
};

class ViolationError : public std::runtime_error {
 public:
  explicit ViolationError(Violation v);

  const Violation& violation() const { return violation_; }
  ViolationKind kind() const { return violation_.kind; }

 private:
  Violation violation_;
};

[[noreturn]] void fail(ViolationKind kind, std::vector<Element> witness = {},
                       std::string context = {});

/// Converts a raw table into an OpTable, throwing NotClosed with the first
/// offending position when it is not square or has out-of-range entries.
OpTable checked_table(const RawTable& raw);

}  // namespace wbk
