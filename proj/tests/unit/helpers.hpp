#pragma once

#include <initializer_list>
#include <vector>

#include "lidcolor/coloring.hpp"
#include "lidcolor/graph.hpp"

// Colorings are written 1-based in the tests, as in the text formats.
inline lidcolor::Coloring colors1(std::initializer_list<int> one_based) {
    std::vector<lidcolor::Color> c;
    for (int x : one_based) c.push_back(x - 1);
    return lidcolor::Coloring(std::move(c));
}

inline std::vector<int> plus_one(const lidcolor::Coloring& c) {
    std::vector<int> out;
    for (auto x : c.values()) out.push_back(x + 1);
    return out;
}
