#pragma once

#include <string>
#include <vector>

#include "plw/lattice.hpp"

namespace plw {

// A failing tuple of elements plus the axiom tag it violates.
struct Witness {
  std::string axiom;
  std::vector<Elem> elems;

  bool operator==(const Witness&) const = default;
};

// One axiom's verdict inside a class check.
struct CheckItem {
  std::string axiom;
  bool pass = true;
  std::vector<Witness> witnesses;  // nonempty iff !pass

  static CheckItem ok(std::string axiom) { return {std::move(axiom), true, {}}; }
  static CheckItem fail(std::string axiom, std::vector<Elem> elems) {
    CheckItem it{axiom, false, {}};
    it.witnesses.push_back(Witness{std::move(axiom), std::move(elems)});
    return it;
  }
};

// Per-class verdict: one entry per axiom, overall = conjunction.
struct CheckReport {
  std::string class_tag;
  std::vector<CheckItem> items;

  bool pass() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return true;
  }
  const CheckItem* find(const std::string& axiom) const {
    for (const auto& it : items)
      if (it.axiom == axiom) return &it;
    return nullptr;
  }
  void add(CheckItem it) { items.push_back(std::move(it)); }
};

}  // namespace plw
