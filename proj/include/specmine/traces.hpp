#pragma once

#include <cstddef>
#include <iosfwd>
#include <set>
#include <span>
#include <string>
#include <string_view>

#include "specmine/fsa.hpp"

namespace specmine {

/// A non-empty sequence of operation names observed in one conversation.
class Trace {
 public:
  /// Throws ConfigError when `ops` is empty or holds an empty/whitespace name.
  explicit Trace(OpSeq ops);
  Trace(std::initializer_list<std::string> ops) : Trace(OpSeq(ops)) {}

  const OpSeq& ops() const noexcept { return ops_; }
  std::size_t size() const noexcept { return ops_.size(); }
  const std::string& operator[](std::size_t i) const { return ops_[i]; }
  operator std::span<const std::string>() const noexcept { return ops_; }

  friend auto operator<=>(const Trace&, const Trace&) = default;

 private:
  OpSeq ops_;
};

/// Deduplicated trace corpus. Iteration order is lexicographic.
class TraceSet {
 public:
  TraceSet() = default;
  TraceSet(std::initializer_list<Trace> traces);

  /// Returns false (and bumps duplicate_count) when already present.
  bool insert(Trace t);

  bool contains(std::span<const std::string> ops) const;

  auto begin() const { return traces_.begin(); }
  auto end() const { return traces_.end(); }
  std::size_t size() const noexcept { return traces_.size(); }
  bool empty() const noexcept { return traces_.empty(); }

  /// Union of the operations of every member.
  const std::set<std::string>& alphabet() const noexcept { return alphabet_; }

  /// Number of rejected duplicate insertions (diagnostics only).
  std::size_t duplicate_count() const noexcept { return duplicates_; }

  std::size_t max_length() const noexcept;

  friend bool operator==(const TraceSet& a, const TraceSet& b) { return a.traces_ == b.traces_; }

 private:
  std::set<Trace> traces_;
  std::set<std::string> alphabet_;
  std::size_t duplicates_ = 0;
};

/// One trace per non-blank line; operations separated by commas and/or
/// whitespace; lines starting with '#' are comments. Throws ParseError for a
/// line holding only separators and for a corpus with no traces.
TraceSet parse_traces(std::istream& in);
TraceSet parse_traces(std::string_view text);

/// Comma-separated operations, one trace per line, lexicographic order.
std::string serialize_traces(const TraceSet& traces);

/// Prefix tree acceptor: one path per distinct prefix, end-of-trace states
/// accepting. Throws ConfigError on an empty set.
Fsa build_pta(const TraceSet& traces);

}  // namespace specmine
