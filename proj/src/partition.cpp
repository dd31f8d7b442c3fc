#include "diffterm/partition.hpp"

#include <cctype>
#include <stdexcept>
#include <unordered_map>

namespace diffterm {

namespace {

void check_size(int n) {
  if (n < 1) throw std::invalid_argument("partition size must be at least 1");
}

}  // namespace

Partition Partition::bottom(int n) {
  check_size(n);
  std::vector<int> rep(n);
  for (int x = 0; x < n; ++x) rep[x] = x;
  return Partition(std::move(rep));
}

Partition Partition::top(int n) {
  check_size(n);
  return Partition(std::vector<int>(n, 0));
}

Partition Partition::from_map(const std::vector<int>& map) {
  UnionFind uf(static_cast<int>(map.size()));
  for (int x = 0; x < static_cast<int>(map.size()); ++x) {
    int y = map[x];
    if (y < 0 || y >= static_cast<int>(map.size()))
      throw std::invalid_argument("partition map entry out of range");
    uf.unite(x, y);
  }
  return uf.to_partition();
}

Partition Partition::parse(std::string_view text) {
  std::vector<std::vector<int>> blocks;
  std::vector<int> current;
  bool in_number = false;
  long number = 0;
  bool seen_bar = false;
  auto flush_number = [&] {
    if (in_number) {
      current.push_back(static_cast<int>(number));
      number = 0;
      in_number = false;
    }
  };
  auto flush_block = [&] {
    flush_number();
    if (!current.empty()) {
      blocks.push_back(current);
      current.clear();
    }
  };
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) {
      flush_number();
    } else if (ch == '|') {
      seen_bar = true;
      flush_block();
    } else if (ch == ',') {
      flush_number();
    } else if (ch >= '0' && ch <= '9') {
      if (number > 100000000)
        throw std::invalid_argument("partition element too large");
      number = number * 10 + (ch - '0');
      in_number = true;
    } else {
      throw std::invalid_argument(std::string("unexpected character '") + ch +
                                  "' in partition text");
    }
  }
  flush_block();
  if (!seen_bar || blocks.empty())
    throw std::invalid_argument("partition text has no blocks");

  int n = 0;
  for (const auto& block : blocks) n += static_cast<int>(block.size());
  std::vector<int> map(n, -1);
  for (const auto& block : blocks) {
    for (int x : block) {
      if (x >= n)
        throw std::invalid_argument(
            "partition blocks must cover 0..n-1 exactly");
      if (map[x] != -1)
        throw std::invalid_argument("element repeated in partition text");
      map[x] = block.front();
    }
  }
  return from_map(map);
}

int Partition::block_count() const {
  int count = 0;
  for (int x = 0; x < size(); ++x)
    if (rep_[x] == x) ++count;
  return count;
}

std::vector<std::vector<int>> Partition::blocks() const {
  std::vector<int> index(size(), -1);
  std::vector<std::vector<int>> out;
  for (int x = 0; x < size(); ++x) {
    int r = rep_[x];
    if (index[r] < 0) {
      index[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[index[r]].push_back(x);
  }
  return out;
}

std::vector<int> Partition::block_of(int x) const {
  std::vector<int> out;
  for (int y = 0; y < size(); ++y)
    if (rep_[y] == rep_[x]) out.push_back(y);
  return out;
}

bool Partition::leq(const Partition& q) const {
  if (size() != q.size())
    throw std::invalid_argument("partition size mismatch");
  for (int x = 0; x < size(); ++x)
    if (q.rep_[x] != q.rep_[rep_[x]]) return false;
  return true;
}

std::string Partition::to_text() const {
  std::string out = "|";
  for (const auto& block : blocks()) {
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(block[i]);
    }
    out += '|';
  }
  return out;
}

Partition join(const Partition& p, const Partition& q) {
  if (p.size() != q.size())
    throw std::invalid_argument("partition size mismatch");
  UnionFind uf(p.size());
  for (int x = 0; x < p.size(); ++x) {
    uf.unite(x, p.rep(x));
    uf.unite(x, q.rep(x));
  }
  return uf.to_partition();
}

Partition meet(const Partition& p, const Partition& q) {
  const int n = p.size();
  if (n != q.size()) throw std::invalid_argument("partition size mismatch");
  std::unordered_map<long long, int> first;
  std::vector<int> map(n);
  for (int x = 0; x < n; ++x) {
    long long key = static_cast<long long>(p.rep(x)) * n + q.rep(x);
    auto [it, fresh] = first.try_emplace(key, x);
    map[x] = it->second;
  }
  return Partition::from_map(map);
}

UnionFind::UnionFind(int n) : parent_(n) {
  for (int x = 0; x < n; ++x) parent_[x] = x;
}

int UnionFind::find(int x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool UnionFind::unite(int x, int y) {
  int rx = find(x), ry = find(y);
  if (rx == ry) return false;
  // keep the smaller root so canonicalization is a single pass
  if (rx < ry)
    parent_[ry] = rx;
  else
    parent_[rx] = ry;
  return true;
}

Partition UnionFind::to_partition() {
  const int n = static_cast<int>(parent_.size());
  std::vector<int> rep(n);
  // union by minimum keeps every root at the least element of its block
  for (int x = 0; x < n; ++x) rep[x] = find(x);
  return Partition(std::move(rep));
}

}  // namespace diffterm
