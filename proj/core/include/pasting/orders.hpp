#pragma once

#include "pasting/scheme.hpp"

#include <compare>
#include <utility>
#include <vector>

namespace pasting {

/// Relations between faces, stored as dense matrices indexed by the scheme's
/// canonical face order.
class FaceRelations {
public:
  explicit FaceRelations(const PastingScheme &scheme);

  /// tau_F and sigma_G share an edge.
  bool triangle(const FaceId &f, const FaceId &g) const;
  /// Transitive closure of triangle.
  bool below(const FaceId &f, const FaceId &g) const;
  /// A possibly empty directed path runs from t_F to s_G.
  bool precedes(const FaceId &f, const FaceId &g) const;
  bool comparable(const FaceId &f, const FaceId &g) const {
    return below(f, g) || below(g, f);
  }

  bool triangle(std::size_t f, std::size_t g) const { return tri_[f][g]; }
  bool below(std::size_t f, std::size_t g) const { return closure_[f][g]; }
  bool precedes(std::size_t f, std::size_t g) const { return prec_[f][g]; }

  std::size_t size() const { return ids_.size(); }
  const std::vector<FaceId> &faceIds() const { return ids_; }
  std::size_t index(const FaceId &f) const;

  std::vector<std::pair<FaceId, FaceId>> trianglePairs() const;
  std::vector<std::pair<FaceId, FaceId>> belowPairs() const;
  std::vector<std::pair<FaceId, FaceId>> precedesPairs() const;

private:
  std::vector<FaceId> ids_;
  std::vector<std::vector<bool>> tri_, closure_, prec_;
};

FaceRelations faceRelations(const PastingScheme &scheme);

/// An object of the composition-order groupoid: a linear extension of the
/// transitive triangle relation.
struct CompOrder {
  std::vector<FaceId> faces;

  std::size_t size() const { return faces.size(); }
  const FaceId &operator[](std::size_t i) const { return faces[i]; }
  std::size_t position(const FaceId &f) const;

  auto operator<=>(const CompOrder &) const = default;
  bool operator==(const CompOrder &) const = default;
};

/// Adjacent transposition of incomparable faces at positions index, index+1.
struct GenMove {
  CompOrder at;
  std::size_t index = 0;

  CompOrder result() const;
  bool operator==(const GenMove &) const = default;
};

bool isValidOrder(const FaceRelations &rel, const CompOrder &o);

/// All linear extensions, sorted lexicographically by face id sequence.
std::vector<CompOrder> enumerateOrders(const PastingScheme &scheme);
std::vector<CompOrder> enumerateOrders(const FaceRelations &rel);

std::vector<GenMove> genMoves(const PastingScheme &scheme, const CompOrder &o);
std::vector<GenMove> genMoves(const FaceRelations &rel, const CompOrder &o);

/// Deterministic path from a to b: bubble b[k] leftward into position k.
std::vector<GenMove> connectOrders(const PastingScheme &scheme,
                                   const CompOrder &a, const CompOrder &b);
std::vector<GenMove> connectOrders(const FaceRelations &rel,
                                   const CompOrder &a, const CompOrder &b);

std::string toString(const CompOrder &o);
CompOrder parseOrder(const std::string &text);

} // namespace pasting
