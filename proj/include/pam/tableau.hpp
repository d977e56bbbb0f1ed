#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pam/matching.hpp"

namespace pam {

/// Row lengths, weakly decreasing, no zero parts. The empty partition is {}.
using Partition = std::vector<int>;

std::string format_partition(const Partition& p);

/// Standard Young tableau with distinct entries (not necessarily 1..k).
class StandardTableau {
 public:
  StandardTableau() = default;

  /// Throws std::invalid_argument unless rows increase strictly, columns
  /// increase strictly, row lengths weakly decrease and entries are distinct.
  static StandardTableau from_rows(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
  Partition shape() const;
  bool empty() const noexcept { return rows_.empty(); }
  int size() const;
  bool contains(int value) const;

  friend bool operator==(const StandardTableau&, const StandardTableau&) = default;

 private:
  friend struct TableauAccess;
  std::vector<std::vector<int>> rows_;
};

struct RowInsertion {
  StandardTableau tableau;
  int row = 0;  // 1-based row of the newly created cell
};

struct Ejection {
  StandardTableau tableau;
  int value = 0;
};

/// Classical row bumping. Throws std::invalid_argument if `value` is
/// already present.
RowInsertion rsk_row_insert(const StandardTableau& t, int value);

/// Exact inverse of row bumping started from the last cell of row `row`
/// (1-based), which must be a removable corner.
Ejection rsk_reverse(const StandardTableau& t, int row);

/// A sequence of partitions from {} back to {}, one square added or
/// removed per step.
class OscillatingTableau {
 public:
  OscillatingTableau() : shapes_{Partition{}} {}

  /// Throws std::invalid_argument on a non-partition, a step that is not a
  /// single square, or a sequence not starting and ending empty.
  static OscillatingTableau from_shapes(std::vector<Partition> shapes);

  /// Parses "[];[1];[2];[2,1];[1,1];[1];[]".
  static OscillatingTableau parse(std::string_view text);

  const std::vector<Partition>& shapes() const noexcept { return shapes_; }
  int length() const noexcept { return static_cast<int>(shapes_.size()) - 1; }
  std::string to_string() const;

  friend bool operator==(const OscillatingTableau&, const OscillatingTableau&) = default;
  friend auto operator<=>(const OscillatingTableau& a, const OscillatingTableau& b) { return a.shapes_ <=> b.shapes_; }

 private:
  std::vector<Partition> shapes_;
};

/// Stanley's bijection from oscillating tableaux of length 2n to matchings
/// on [2n]: a growth step i adds entry i in the new square, a shrink step i
/// reverse-bumps from the vacated corner and the ejected j gives edge (j, i).
Matching rho(const OscillatingTableau& t);

/// Scans i = 2n..1: a closer i row-inserts its opener, an opener i deletes
/// entry i. The recorded shapes, read forwards, form the tableau.
OscillatingTableau rho_inv(const Matching& m);

/// Every shape is (k) or (k,1), and no (k,1) is followed by (k+1,1).
bool is_restricted(const OscillatingTableau& t);

/// All oscillating tableaux of the given length.
std::vector<OscillatingTableau> all_oscillating_tableaux(int length);

}  // namespace pam
