#pragma once

/**
 * @file coords.hpp
 * @brief Coordinate systems on superspace with Weisfeiler weights.
 *
 * A coordinate system is an ordered list of named even/odd coordinates. The
 * declaration order fixes the canonical order of odd factors in monomials.
 * Each system also owns its "form system": the same coordinates followed by
 * their differentials dx, whose parity is flipped. Differential forms are
 * polynomials over the form system.
 */

#include <algorithm>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "superfield/rational.hpp"

namespace superfield {

enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

inline Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}
inline int bit(Parity p) { return static_cast<int>(p); }
inline int sign(Parity p) { return p == Parity::Odd ? -1 : 1; }
inline Parity parity_of(int k) { return (k & 1) != 0 ? Parity::Odd : Parity::Even; }

struct Coordinate {
  std::string name;
  Parity parity = Parity::Even;
  int weight = 1;
};

inline constexpr int kMaxEven = 24;
inline constexpr int kMaxOdd = 64;

class CoordinateSystem;
using SystemPtr = std::shared_ptr<const CoordinateSystem>;

class CoordinateSystem {
 public:
  /// Builds a system together with its form system.
  static SystemPtr make(std::vector<Coordinate> coords) {
    auto base = std::shared_ptr<CoordinateSystem>(new CoordinateSystem(coords));
    // Form system: the base coordinates followed by their differentials.
    // Base evens and odds keep their slots, so base monomials embed as is.
    std::vector<Coordinate> doubled = coords;
    for (const auto& c : coords) doubled.push_back({"d" + c.name, c.parity + Parity::Odd, c.weight});
    auto forms = std::shared_ptr<CoordinateSystem>(new CoordinateSystem(doubled));
    base->forms_ = forms;
    return base;
  }

  std::size_t size() const { return coords_.size(); }
  const Coordinate& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Coordinate>& coords() const { return coords_; }
  Parity parity(std::size_t i) const { return coords_[i].parity; }
  int weight(std::size_t i) const { return coords_[i].weight; }
  /// Position inside the even block or the odd block.
  int slot(std::size_t i) const { return slot_[i]; }
  int n_even() const { return n_even_; }
  int n_odd() const { return n_odd_; }
  /// Coordinate index of the k-th even / odd coordinate.
  std::size_t even_coord(int k) const { return even_index_[k]; }
  std::size_t odd_coord(int k) const { return odd_index_[k]; }
  int odd_weight(int k) const { return coords_[odd_index_[k]].weight; }
  int even_weight(int k) const { return coords_[even_index_[k]].weight; }
  int max_weight() const {
    int w = 0;
    for (const auto& c : coords_) w = std::max(w, c.weight);
    return w;
  }

  std::size_t index(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) throw Error("unknown coordinate '" + name + "'");
    return it->second;
  }
  bool contains(const std::string& name) const { return by_name_.count(name) != 0; }

  /// The system of coordinates and differentials; null for a form system.
  const SystemPtr& forms() const { return forms_; }
  /// Index of dx^mu inside the form system.
  std::size_t differential(std::size_t mu) const { return coords_.size() + mu; }

  bool same_as(const CoordinateSystem& other) const {
    if (this == &other) return true;
    if (coords_.size() != other.coords_.size()) return false;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      const auto& a = coords_[i];
      const auto& b = other.coords_[i];
      if (a.name != b.name || a.parity != b.parity || a.weight != b.weight) return false;
    }
    return true;
  }

 private:
  explicit CoordinateSystem(std::vector<Coordinate> coords) : coords_(std::move(coords)) {
    slot_.resize(coords_.size());
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      const auto& c = coords_[i];
      if (c.weight <= 0) throw Error("coordinate '" + c.name + "' needs a positive weight");
      if (!by_name_.emplace(c.name, i).second) throw Error("duplicate coordinate '" + c.name + "'");
      if (c.parity == Parity::Even) {
        slot_[i] = n_even_++;
        even_index_.push_back(i);
      } else {
        slot_[i] = n_odd_++;
        odd_index_.push_back(i);
      }
    }
    if (n_even_ > kMaxEven) throw Error("too many even coordinates");
    if (n_odd_ > kMaxOdd) throw Error("too many odd coordinates");
  }

  std::vector<Coordinate> coords_;
  std::vector<int> slot_;
  std::vector<std::size_t> even_index_, odd_index_;
  int n_even_ = 0;
  int n_odd_ = 0;
  std::unordered_map<std::string, std::size_t> by_name_;
  SystemPtr forms_;
};

inline void require_same(const SystemPtr& a, const SystemPtr& b) {
  if (a && b && !a->same_as(*b)) throw Error("coordinate systems do not match");
}

}  // namespace superfield
