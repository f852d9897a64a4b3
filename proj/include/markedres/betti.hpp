#pragma once

#include <map>
#include <string>
#include <utility>

namespace markedres {

// Graded ranks (i, j) -> count, printed with rows indexed by j - i.
class BettiTable {
 public:
  long get(int i, int j) const {
    auto it = entries_.find({i, j});
    return it == entries_.end() ? 0 : it->second;
  }
  void add(int i, int j, long v) {
    if (v == 0) return;
    long& slot = entries_[{i, j}];
    slot += v;
    if (slot == 0) entries_.erase({i, j});
  }
  void set(int i, int j, long v) {
    if (v == 0)
      entries_.erase({i, j});
    else
      entries_[{i, j}] = v;
  }
  const std::map<std::pair<int, int>, long>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  // total rank at homological position i
  long total(int i) const {
    long s = 0;
    for (const auto& [k, v] : entries_)
      if (k.first == i) s += v;
    return s;
  }

  friend bool operator==(const BettiTable& a, const BettiTable& b) { return a.entries_ == b.entries_; }
  friend bool operator!=(const BettiTable& a, const BettiTable& b) { return !(a == b); }

  // every entry of a bounded by the corresponding entry of b
  bool bounded_by(const BettiTable& b) const {
    for (const auto& [k, v] : entries_)
      if (v > b.get(k.first, k.second)) return false;
    return true;
  }

  std::string render() const;

 private:
  std::map<std::pair<int, int>, long> entries_;
};

}  // namespace markedres
