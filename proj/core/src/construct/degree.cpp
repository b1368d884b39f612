#include <algorithm>

#include "lidcolor/construct.hpp"

namespace lidcolor::construct {

Coloring color_bounded_degree(const Graph& g) {
    const Vertex n = g.size();
    std::vector<Color> colors(n, -1);
    std::vector<int> dist(n, -1);
    std::vector<Vertex> ball;
    std::vector<char> taken;
    for (Vertex v = 0; v < n; ++v) {
        // Vertices within distance 3 of v.
        ball.assign(1, v);
        dist[v] = 0;
        for (std::size_t head = 0; head < ball.size(); ++head) {
            const Vertex x = ball[head];
            if (dist[x] == 3) continue;
            for (Vertex y : g.neighbors(x))
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    ball.push_back(y);
                }
        }
        taken.assign(ball.size() + 1, 0);
        for (Vertex x : ball) {
            if (colors[x] >= 0 && colors[x] < static_cast<Color>(taken.size())) taken[colors[x]] = 1;
            dist[x] = -1;
        }
        Color c = 0;
        while (taken[c]) ++c;
        colors[v] = c;
    }
    return Coloring(std::move(colors));
}

}  // namespace lidcolor::construct
