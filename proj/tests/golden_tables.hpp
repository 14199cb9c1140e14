#pragma once

#include "toricfano/invariants.hpp"

#include <functional>
#include <string>
#include <vector>

namespace golden {

struct CellCheck {
    std::string table;
    std::string id;      // polytope checked
    std::string column;  // e.g. "sve Z/2"
    std::string expected;
    std::string actual;
    bool passed = false;
};

// Checks every cell of the transcribed invariant tables against freshly computed invariants.
// Rows listing further ids check those rings with coordinate-free data (counts, span dimensions).
std::vector<CellCheck> check_invariant_tables(const std::string& path,
                                              const std::vector<toricfano::SmoothFanoPolytope>& polytopes,
                                              int bound,
                                              const std::function<bool(const std::string&)>& table_filter = {});

// Mod-p cell reading: literal items and spans of items, as normalized vectors (first nonzero entry 1).
std::vector<toricfano::CoeffVector> read_mod_p_cell(const std::string& cell, const std::vector<std::string>& names,
                                                    std::uint32_t p);
// Integer cell reading: items as primitive vectors with first nonzero entry positive.
std::vector<toricfano::CoeffVector> read_integer_cell(const std::string& cell, const std::vector<std::string>& names);

}  // namespace golden
