#include "topo/coloring.hpp"

#include <algorithm>
#include <queue>
#include <vector>

namespace topo {

namespace {

class Colorer {
public:
    Colorer(const Graph& graph, int num_colors) : graph_(graph), num_colors_(num_colors) {}

    std::optional<std::map<int, int>> run() {
        if (num_colors_ <= 0)
            return graph_.empty() ? std::optional<std::map<int, int>>(std::map<int, int>{})
                                  : std::nullopt;
        if (search())
            return colors_;
        return std::nullopt;
    }

private:
    int pick_vertex() const {
        int best = -1;
        std::size_t best_sat = 0, best_free = 0;
        for (const auto& [v, adj] : graph_) {
            if (colors_.count(v))
                continue;
            std::set<int> used;
            std::size_t free = 0;
            for (int w : adj) {
                auto it = colors_.find(w);
                if (it != colors_.end())
                    used.insert(it->second);
                else
                    ++free;
            }
            if (best == -1 || used.size() > best_sat ||
                (used.size() == best_sat && free > best_free)) {
                best = v;
                best_sat = used.size();
                best_free = free;
            }
        }
        return best;
    }

    bool search() {
        int v = pick_vertex();
        if (v == -1 && colors_.size() == graph_.size())
            return true;
        std::set<int> forbidden;
        for (int w : graph_.at(v)) {
            auto it = colors_.find(w);
            if (it != colors_.end())
                forbidden.insert(it->second);
        }
        for (int c = 1; c <= num_colors_; ++c) {
            if (forbidden.count(c))
                continue;
            colors_[v] = c;
            if (search())
                return true;
            colors_.erase(v);
        }
        return false;
    }

    const Graph& graph_;
    int num_colors_;
    std::map<int, int> colors_;
};

} // namespace

std::optional<std::map<int, int>> color_graph(const Graph& graph, int num_colors) {
    for (const auto& [v, adj] : graph)
        if (adj.count(v))
            return std::nullopt;
    return Colorer(graph, num_colors).run();
}

std::vector<std::vector<int>> graph_components(const Graph& graph) {
    std::vector<std::vector<int>> components;
    std::set<int> seen;
    for (const auto& entry : graph) {
        int start = entry.first;
        if (seen.count(start))
            continue;
        std::vector<int> component;
        std::queue<int> queue;
        queue.push(start);
        seen.insert(start);
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop();
            component.push_back(v);
            for (int w : graph.at(v))
                if (seen.insert(w).second)
                    queue.push(w);
        }
        std::sort(component.begin(), component.end());
        components.push_back(std::move(component));
    }
    return components;
}

} // namespace topo
