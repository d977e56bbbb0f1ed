#include "pam/tableau.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <optional>
#include <stdexcept>

#include "pam/errors.hpp"

namespace pam {

struct TableauAccess {
  static std::vector<std::vector<int>>& rows(StandardTableau& t) { return t.rows_; }
};

namespace {

bool is_partition(const Partition& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0 || (i > 0 && p[i] > p[i - 1])) return false;
  }
  return true;
}

struct SquareChange {
  int row = 0;     // 1-based
  int delta = 0;   // +1 added, -1 removed
};

std::optional<SquareChange> single_square_change(const Partition& from, const Partition& to) {
  const std::size_t rows = std::max(from.size(), to.size());
  std::optional<SquareChange> change;
  for (std::size_t r = 0; r < rows; ++r) {
    const int a = r < from.size() ? from[r] : 0;
    const int b = r < to.size() ? to[r] : 0;
    if (a == b) continue;
    if (change || (b - a != 1 && a - b != 1)) return std::nullopt;
    change = SquareChange{static_cast<int>(r) + 1, b - a};
  }
  return change;
}

}  // namespace

std::string format_partition(const Partition& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += std::to_string(p[i]);
  }
  out.push_back(']');
  return out;
}

StandardTableau StandardTableau::from_rows(std::vector<std::vector<int>> rows) {
  std::vector<int> seen;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.empty()) throw std::invalid_argument("tableau rows must be nonempty");
    if (r > 0 && row.size() > rows[r - 1].size()) throw std::invalid_argument("row lengths must weakly decrease");
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0 && row[c] <= row[c - 1]) throw std::invalid_argument("rows must increase strictly");
      if (r > 0 && row[c] <= rows[r - 1][c]) throw std::invalid_argument("columns must increase strictly");
      seen.push_back(row[c]);
    }
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
    throw std::invalid_argument("tableau entries must be distinct");
  }
  StandardTableau t;
  t.rows_ = std::move(rows);
  return t;
}

Partition StandardTableau::shape() const {
  Partition p;
  for (const auto& row : rows_) p.push_back(static_cast<int>(row.size()));
  return p;
}

int StandardTableau::size() const {
  int total = 0;
  for (const auto& row : rows_) total += static_cast<int>(row.size());
  return total;
}

bool StandardTableau::contains(int value) const {
  return std::any_of(rows_.begin(), rows_.end(),
                     [&](const auto& row) { return std::binary_search(row.begin(), row.end(), value); });
}

RowInsertion rsk_row_insert(const StandardTableau& t, int value) {
  if (t.contains(value)) throw std::invalid_argument("entry " + std::to_string(value) + " already in tableau");
  StandardTableau out = t;
  auto& rows = TableauAccess::rows(out);
  int x = value;
  for (std::size_t r = 0;; ++r) {
    if (r == rows.size()) {
      rows.push_back({x});
      return {std::move(out), static_cast<int>(r) + 1};
    }
    auto& row = rows[r];
    auto it = std::upper_bound(row.begin(), row.end(), x);
    if (it == row.end()) {
      row.push_back(x);
      return {std::move(out), static_cast<int>(r) + 1};
    }
    std::swap(x, *it);
  }
}

Ejection rsk_reverse(const StandardTableau& t, int row) {
  const auto& rows = t.rows();
  if (row < 1 || row > static_cast<int>(rows.size())) {
    throw std::invalid_argument("row " + std::to_string(row) + " is not a row of the tableau");
  }
  const std::size_t r0 = static_cast<std::size_t>(row - 1);
  if (r0 + 1 < rows.size() && rows[r0 + 1].size() == rows[r0].size()) {
    throw std::invalid_argument("last cell of row " + std::to_string(row) + " is not a removable corner");
  }
  StandardTableau out = t;
  auto& rs = TableauAccess::rows(out);
  int x = rs[r0].back();
  rs[r0].pop_back();
  if (rs[r0].empty()) rs.pop_back();
  for (std::size_t r = r0; r-- > 0;) {
    auto& above = rs[r];
    // The largest entry smaller than x is the one x bumped on the way down.
    auto it = std::lower_bound(above.begin(), above.end(), x);
    --it;
    std::swap(x, *it);
  }
  return {std::move(out), x};
}

OscillatingTableau OscillatingTableau::from_shapes(std::vector<Partition> shapes) {
  if (shapes.empty() || !shapes.front().empty() || !shapes.back().empty()) {
    throw std::invalid_argument("oscillating tableau must start and end with the empty partition");
  }
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    if (!is_partition(shapes[i])) {
      throw std::invalid_argument("shape " + std::to_string(i) + " " + format_partition(shapes[i]) +
                                  " is not a partition");
    }
    if (i > 0 && !single_square_change(shapes[i - 1], shapes[i])) {
      throw std::invalid_argument("step " + std::to_string(i) + " does not add or remove exactly one square");
    }
  }
  OscillatingTableau t;
  t.shapes_ = std::move(shapes);
  return t;
}

OscillatingTableau OscillatingTableau::parse(std::string_view text) {
  std::vector<Partition> shapes;
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) { throw ParseError(pos + 1, why); };
  while (true) {
    if (pos >= text.size() || text[pos] != '[') fail("expected '['");
    ++pos;
    Partition p;
    while (pos < text.size() && text[pos] != ']') {
      int value = 0;
      auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
      if (ec != std::errc{}) fail("expected a row length");
      p.push_back(value);
      pos = static_cast<std::size_t>(ptr - text.data());
      if (pos < text.size() && text[pos] == ',') ++pos;
    }
    if (pos >= text.size()) fail("missing ']'");
    ++pos;
    shapes.push_back(std::move(p));
    if (pos == text.size()) break;
    if (text[pos] != ';') fail("expected ';'");
    ++pos;
  }
  return from_shapes(std::move(shapes));
}

std::string OscillatingTableau::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < shapes_.size(); ++i) {
    if (i > 0) out.push_back(';');
    out += format_partition(shapes_[i]);
  }
  return out;
}

Matching rho(const OscillatingTableau& t) {
  const auto& shapes = t.shapes();
  const int len = t.length();
  if (len % 2 != 0) throw std::invalid_argument("oscillating tableau of odd length has no matching");
  std::vector<int> partners(static_cast<std::size_t>(len) + 1, 0);
  StandardTableau current;
  for (int i = 1; i <= len; ++i) {
    const auto change = single_square_change(shapes[static_cast<std::size_t>(i - 1)], shapes[static_cast<std::size_t>(i)]);
    if (change->delta > 0) {
      auto rows = current.rows();
      if (change->row > static_cast<int>(rows.size())) rows.emplace_back();
      rows[static_cast<std::size_t>(change->row - 1)].push_back(i);
      current = StandardTableau::from_rows(std::move(rows));
    } else {
      Ejection e = rsk_reverse(current, change->row);
      current = std::move(e.tableau);
      partners[static_cast<std::size_t>(e.value)] = i;
      partners[static_cast<std::size_t>(i)] = e.value;
    }
  }
  return Matching::from_partners(std::move(partners));
}

OscillatingTableau rho_inv(const Matching& m) {
  const int len = m.node_count();
  std::vector<Partition> shapes(static_cast<std::size_t>(len) + 1);
  StandardTableau current;
  for (int i = len; i >= 1; --i) {
    if (m.is_opener(i)) {
      auto rows = current.rows();
      auto row = std::find_if(rows.begin(), rows.end(), [&](const auto& r) { return !r.empty() && r.back() == i; });
      if (row == rows.end()) throw std::logic_error("entry " + std::to_string(i) + " is not at the end of a row");
      row->pop_back();
      if (row->empty()) rows.erase(row);
      current = StandardTableau::from_rows(std::move(rows));
    } else {
      current = rsk_row_insert(current, m.partner(i)).tableau;
    }
    shapes[static_cast<std::size_t>(i - 1)] = current.shape();
  }
  return OscillatingTableau::from_shapes(std::move(shapes));
}

bool is_restricted(const OscillatingTableau& t) {
  const auto& shapes = t.shapes();
  auto hook_like = [](const Partition& p) { return p.size() <= 1 || (p.size() == 2 && p[1] == 1); };
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    if (!hook_like(shapes[i])) return false;
    if (i > 0 && shapes[i - 1].size() == 2 && shapes[i].size() == 2 && shapes[i][0] == shapes[i - 1][0] + 1) {
      return false;
    }
  }
  return true;
}

std::vector<OscillatingTableau> all_oscillating_tableaux(int length) {
  if (length < 0) throw std::invalid_argument("length must be non-negative");
  std::vector<OscillatingTableau> out;
  std::vector<Partition> shapes{Partition{}};
  std::function<void()> grow = [&]() {
    const Partition last = shapes.back();
    const int used = static_cast<int>(shapes.size()) - 1;
    int size = 0;
    for (int part : last) size += part;
    if (used == length) {
      if (last.empty()) out.push_back(OscillatingTableau::from_shapes(shapes));
      return;
    }
    // Must be able to empty the shape in the remaining steps.
    if (size > length - used) return;
    for (std::size_t r = 0; r <= last.size(); ++r) {
      Partition next = last;
      if (r == next.size()) next.push_back(0);
      if (r > 0 && next[r] + 1 > next[r - 1]) continue;
      ++next[r];
      shapes.push_back(std::move(next));
      grow();
      shapes.pop_back();
    }
    for (std::size_t r = 0; r < last.size(); ++r) {
      if (r + 1 < last.size() && last[r + 1] == last[r]) continue;
      Partition next = last;
      if (--next[r] == 0) next.pop_back();
      shapes.push_back(std::move(next));
      grow();
      shapes.pop_back();
    }
  };
  grow();
  return out;
}

}  // namespace pam
