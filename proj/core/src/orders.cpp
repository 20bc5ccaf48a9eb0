#include "pasting/orders.hpp"

#include "pasting/error.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace pasting {

FaceRelations::FaceRelations(const PastingScheme &scheme) {
  for (const auto &f : scheme.faces())
    ids_.push_back(f.id);
  const std::size_t n = ids_.size();
  tri_.assign(n, std::vector<bool>(n, false));
  prec_.assign(n, std::vector<bool>(n, false));

  for (std::size_t i = 0; i < n; ++i) {
    const Face &f = scheme.faces()[i];
    std::set<EdgeId> tau(f.bottom.begin(), f.bottom.end());
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j)
        continue;
      for (const auto &e : scheme.faces()[j].top)
        if (tau.count(e)) {
          tri_[i][j] = true;
          break;
        }
    }
  }

  closure_ = tri_;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (closure_[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (closure_[k][j])
            closure_[i][j] = true;
  for (std::size_t i = 0; i < n; ++i)
    if (closure_[i][i])
      throw Error(ErrorKind::InvalidScheme,
                  "triangle relation is cyclic at face '" + ids_[i] + "'");

  std::map<VertexId, std::vector<VertexId>> out;
  for (const auto &e : scheme.edges())
    out[e.src].push_back(e.tgt);
  auto reachable = [&](const VertexId &from) {
    std::set<VertexId> seen{from};
    std::vector<VertexId> todo{from};
    while (!todo.empty()) {
      auto v = todo.back();
      todo.pop_back();
      for (const auto &w : out[v])
        if (seen.insert(w).second)
          todo.push_back(w);
    }
    return seen;
  };
  for (std::size_t i = 0; i < n; ++i) {
    auto seen = reachable(scheme.pathTarget(scheme.faces()[i].top));
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && seen.count(scheme.pathSource(scheme.faces()[j].top)))
        prec_[i][j] = true;
  }
}

std::size_t FaceRelations::index(const FaceId &f) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), f);
  if (it == ids_.end() || *it != f)
    throw Error(ErrorKind::UnknownFace, "no face '" + f + "'");
  return static_cast<std::size_t>(it - ids_.begin());
}

bool FaceRelations::triangle(const FaceId &f, const FaceId &g) const {
  return tri_[index(f)][index(g)];
}
bool FaceRelations::below(const FaceId &f, const FaceId &g) const {
  return closure_[index(f)][index(g)];
}
bool FaceRelations::precedes(const FaceId &f, const FaceId &g) const {
  return prec_[index(f)][index(g)];
}

namespace {
std::vector<std::pair<FaceId, FaceId>>
pairsOf(const std::vector<FaceId> &ids,
        const std::vector<std::vector<bool>> &m) {
  std::vector<std::pair<FaceId, FaceId>> out;
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = 0; j < ids.size(); ++j)
      if (m[i][j])
        out.emplace_back(ids[i], ids[j]);
  return out;
}
} // namespace

std::vector<std::pair<FaceId, FaceId>> FaceRelations::trianglePairs() const {
  return pairsOf(ids_, tri_);
}
std::vector<std::pair<FaceId, FaceId>> FaceRelations::belowPairs() const {
  return pairsOf(ids_, closure_);
}
std::vector<std::pair<FaceId, FaceId>> FaceRelations::precedesPairs() const {
  return pairsOf(ids_, prec_);
}

FaceRelations faceRelations(const PastingScheme &scheme) {
  return FaceRelations(scheme);
}

std::size_t CompOrder::position(const FaceId &f) const {
  auto it = std::find(faces.begin(), faces.end(), f);
  if (it == faces.end())
    throw Error(ErrorKind::FaceAbsent, "face '" + f + "' not in order " +
                                           toString(*this));
  return static_cast<std::size_t>(it - faces.begin());
}

CompOrder GenMove::result() const {
  CompOrder o = at;
  std::swap(o.faces[index], o.faces[index + 1]);
  return o;
}

bool isValidOrder(const FaceRelations &rel, const CompOrder &o) {
  if (o.size() != rel.size())
    return false;
  std::vector<std::size_t> idx;
  std::set<std::size_t> seen;
  for (const auto &f : o.faces) {
    auto it = std::lower_bound(rel.faceIds().begin(), rel.faceIds().end(), f);
    if (it == rel.faceIds().end() || *it != f)
      return false;
    auto i = static_cast<std::size_t>(it - rel.faceIds().begin());
    if (!seen.insert(i).second)
      return false;
    idx.push_back(i);
  }
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b)
      if (rel.below(idx[b], idx[a]))
        return false;
  return true;
}

std::vector<CompOrder> enumerateOrders(const FaceRelations &rel) {
  // Choosing the smallest available id first at every position yields the
  // extensions in lexicographic order.
  const std::size_t n = rel.size();
  std::vector<CompOrder> out;
  std::vector<std::size_t> current;
  std::vector<bool> used(n, false);
  auto available = [&](std::size_t f) {
    for (std::size_t g = 0; g < n; ++g)
      if (!used[g] && g != f && rel.below(g, f))
        return false;
    return true;
  };
  auto recurse = [&](auto &&self) -> void {
    if (current.size() == n) {
      CompOrder o;
      for (auto i : current)
        o.faces.push_back(rel.faceIds()[i]);
      out.push_back(std::move(o));
      return;
    }
    for (std::size_t f = 0; f < n; ++f) {
      if (used[f] || !available(f))
        continue;
      used[f] = true;
      current.push_back(f);
      self(self);
      current.pop_back();
      used[f] = false;
    }
  };
  recurse(recurse);
  return out;
}

std::vector<CompOrder> enumerateOrders(const PastingScheme &scheme) {
  return enumerateOrders(FaceRelations(scheme));
}

std::vector<GenMove> genMoves(const FaceRelations &rel, const CompOrder &o) {
  if (!isValidOrder(rel, o))
    throw Error(ErrorKind::InvalidOrder, toString(o));
  std::vector<GenMove> out;
  for (std::size_t i = 0; i + 1 < o.size(); ++i)
    if (!rel.comparable(o[i], o[i + 1]))
      out.push_back({o, i});
  return out;
}

std::vector<GenMove> genMoves(const PastingScheme &scheme, const CompOrder &o) {
  return genMoves(FaceRelations(scheme), o);
}

std::vector<GenMove> connectOrders(const FaceRelations &rel,
                                   const CompOrder &a, const CompOrder &b) {
  if (!isValidOrder(rel, a))
    throw Error(ErrorKind::InvalidOrder, toString(a));
  if (!isValidOrder(rel, b))
    throw Error(ErrorKind::InvalidOrder, toString(b));
  std::vector<GenMove> path;
  CompOrder cur = a;
  for (std::size_t k = 0; k < b.size(); ++k) {
    std::size_t pos = cur.position(b[k]);
    while (pos > k) {
      if (rel.comparable(cur[pos - 1], cur[pos]))
        throw Error(ErrorKind::InvalidOrder,
                    "cannot connect " + toString(a) + " to " + toString(b));
      GenMove m{cur, pos - 1};
      cur = m.result();
      path.push_back(std::move(m));
      --pos;
    }
  }
  return path;
}

std::vector<GenMove> connectOrders(const PastingScheme &scheme,
                                   const CompOrder &a, const CompOrder &b) {
  return connectOrders(FaceRelations(scheme), a, b);
}

std::string toString(const CompOrder &o) {
  std::string out;
  for (std::size_t i = 0; i < o.size(); ++i) {
    if (i)
      out += ',';
    out += o[i];
  }
  return out;
}

CompOrder parseOrder(const std::string &text) {
  CompOrder o;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty())
      o.faces.push_back(item);
  return o;
}

} // namespace pasting
