#include "rainbow/algo.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "rainbow/metrics.hpp"

namespace rainbow {

namespace {

struct PatternEdge {
    int from, to, color; // positions along the cycle
};

std::vector<PatternEdge> base_pattern(int len, int c3_side) {
    switch (len) {
    case 3: return {{0, 1, 1}, {1, 2, c3_side}, {2, 0, 2}};
    case 4: return {{0, 1, 1}, {1, 2, 3}, {2, 3, 4}, {3, 0, 2}};
    case 5: return {{0, 1, 1}, {1, 2, 3}, {2, 3, 5}, {3, 4, 4}, {4, 0, 2}};
    default: return {};
    }
}

const std::vector<int>& layer_profile(int len) {
    static const std::vector<int> p3{0, 1, 1};
    static const std::vector<int> p4{0, 1, 2, 1};
    static const std::vector<int> p5{0, 1, 2, 2, 1};
    static const std::vector<int> none{};
    switch (len) {
    case 3: return p3;
    case 4: return p4;
    case 5: return p5;
    default: return none;
    }
}

} // namespace

std::vector<std::pair<Edge, int>> appropriate_coloring(std::span<const int> cycle,
                                                       std::span<const int> layers) {
    const int len = static_cast<int>(cycle.size());
    if (len < 3 || len > 5)
        fail(Errc::bad_cycle_pattern, "cycle length " + std::to_string(len) + " not in {3,4,5}");
    if (layers.size() != cycle.size())
        fail(Errc::bad_cycle_pattern, "layer profile length mismatch");
    const auto& profile = layer_profile(len);
    for (int i = 0; i < len; ++i)
        if (layers[static_cast<std::size_t>(i)] != profile[static_cast<std::size_t>(i)])
            fail(Errc::bad_cycle_pattern, "layer profile does not match a C" + std::to_string(len) +
                                              " through the center");
    std::vector<std::pair<Edge, int>> out;
    for (const auto& pe : base_pattern(len, 3))
        out.emplace_back(make_edge(cycle[static_cast<std::size_t>(pe.from)],
                                   cycle[static_cast<std::size_t>(pe.to)]),
                         pe.color);
    return out;
}

std::vector<int> shortest_cycle_through(const Graph& g, int u, int v,
                                        const std::vector<bool>& covered) {
    const int n = g.vertex_count();
    if (g.edge_index(u, v) < 0)
        fail(Errc::invalid_graph,
             "(" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
    auto skip = [&](int a, int b) { return (a == u && b == v) || (a == v && b == u); };
    auto uncovered = [&](int w) {
        return static_cast<std::size_t>(w) < covered.size() && covered[static_cast<std::size_t>(w)]
                   ? 0
                   : 1;
    };

    // BFS from u in G minus the edge uv.
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    std::vector<int> order;
    dist[static_cast<std::size_t>(u)] = 0;
    order.push_back(u);
    for (std::size_t head = 0; head < order.size(); ++head) {
        int a = order[head];
        for (int b : g.neighbors(a)) {
            if (skip(a, b) || dist[static_cast<std::size_t>(b)] >= 0) continue;
            dist[static_cast<std::size_t>(b)] = dist[static_cast<std::size_t>(a)] + 1;
            order.push_back(b);
        }
    }
    if (dist[static_cast<std::size_t>(v)] < 0)
        fail(Errc::no_cycle, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                 ") lies on no cycle");

    // best[w] = max uncovered-vertex count over shortest w..u paths in the BFS
    // dag (order is by increasing distance, so predecessors are ready).
    std::vector<int> best(static_cast<std::size_t>(n), -1);
    for (int w : order) {
        if (w == u) {
            best[static_cast<std::size_t>(w)] = uncovered(w);
            continue;
        }
        int pred_best = -1;
        for (int z : g.neighbors(w)) {
            if (skip(w, z)) continue;
            if (dist[static_cast<std::size_t>(z)] == dist[static_cast<std::size_t>(w)] - 1)
                pred_best = std::max(pred_best, best[static_cast<std::size_t>(z)]);
        }
        best[static_cast<std::size_t>(w)] = pred_best + uncovered(w);
    }

    // Walk from v toward u, taking the smallest next vertex that keeps the
    // optimum; this yields the lexicographically smallest [u, v, ...] cycle.
    std::vector<int> cycle{u, v};
    int cur = v;
    while (cur != u) {
        int need = best[static_cast<std::size_t>(cur)] - uncovered(cur);
        int next = -1;
        for (int z : g.neighbors(cur)) {
            if (skip(cur, z)) continue;
            if (dist[static_cast<std::size_t>(z)] == dist[static_cast<std::size_t>(cur)] - 1 &&
                best[static_cast<std::size_t>(z)] == need) {
                next = z;
                break; // neighbors ascend
            }
        }
        if (next < 0) fail(Errc::no_cycle, "cycle reconstruction lost the optimum");
        if (next != u) cycle.push_back(next);
        cur = next;
    }
    return cycle;
}

void ColoringTrace::remap(std::span<const int> map) {
    auto one = [&](int& v) {
        if (v >= 0) v = map[static_cast<std::size_t>(v)];
    };
    auto set = [&](std::vector<int>& vs) {
        for (int& v : vs) one(v);
        std::sort(vs.begin(), vs.end());
    };
    one(center);
    for (auto& [b, members] : blocks) {
        one(b);
        set(members);
    }
    set(extension_block);
    set(residual);
    set(covered);
    for (auto& cyc : cycles)
        for (int& v : cyc.vertices) one(v); // sequences keep their order
    set(x_side);
    set(y_side);
    set(s_class);
    set(t_class);
    set(q_class);
    set(p1);
    set(p2);
    for (auto& [d, members] : d_blocks) {
        one(d);
        set(members);
    }
    set(d_residual);
    set(x1);
    set(x2);
    set(p1_prime);
    set(p2_prime);
}

namespace {

// One execution of the step-by-step coloring for a fixed center. Produces a
// (total) color assignment and the trace; verification happens afterwards.
class ColoringRun {
public:
    ColoringRun(const Graph& g, int center) : g_(g), u_(center), colors_(g.edge_count(), 0) {
        layer_ = bfs_distances(g, u_);
        const int n = g.vertex_count();
        for (int v = 0; v < n; ++v) {
            if (layer_[static_cast<std::size_t>(v)] == 1) n1_.push_back(v);
            if (layer_[static_cast<std::size_t>(v)] == 2) n2_.push_back(v);
        }
        trace_.center = u_;
    }

    void run() {
        if (step2()) return;
        if (step3()) return;
        step4();
        if (step5()) return;
        step6();
        step7();
        if (step8()) return;
        step9();
        steps10to13();
    }

    std::vector<int> take_colors() && { return std::move(colors_); }
    ColoringTrace take_trace() && { return std::move(trace_); }

private:
    // First assignment wins: each edge is colored at most once.
    void set_color(int a, int b, int col) {
        int e = g_.edge_index(a, b);
        if (e >= 0 && colors_[static_cast<std::size_t>(e)] == 0)
            colors_[static_cast<std::size_t>(e)] = col;
    }

    int color_of(int a, int b) const {
        int e = g_.edge_index(a, b);
        return e >= 0 ? colors_[static_cast<std::size_t>(e)] : 0;
    }

    bool in_layer(int v, int k) const { return layer_[static_cast<std::size_t>(v)] == k; }

    void color_n1_internal() {
        for (int e = 0; e < g_.edge_count(); ++e) {
            const auto& [a, b] = g_.edge(e);
            if (in_layer(a, 1) && in_layer(b, 1) && colors_[static_cast<std::size_t>(e)] == 0)
                colors_[static_cast<std::size_t>(e)] = 3;
        }
    }

    void fill_leftover() {
        for (int& c : colors_)
            if (c == 0) c = 3;
    }

    void finish(const char* completion_case) {
        trace_.completion_case = completion_case;
        fill_leftover();
    }

    // Greedy disjoint closed-neighborhood blocks in N^1(u); spokes are colored
    // as the blocks form (Step 6 needs every spoke in color 1 or 2).
    bool step2() {
        taken_.assign(static_cast<std::size_t>(g_.vertex_count()), false);
        for (int b : n1_) {
            if (taken_[static_cast<std::size_t>(b)]) continue;
            std::vector<int> members{b};
            for (int w : g_.neighbors(b))
                if (in_layer(w, 1) && !taken_[static_cast<std::size_t>(w)]) members.push_back(w);
            if (members.size() < 2) continue;
            std::sort(members.begin(), members.end());
            for (int w : members) taken_[static_cast<std::size_t>(w)] = true;
            trace_.blocks.emplace_back(b, std::move(members));
        }
        for (const auto& [b, members] : trace_.blocks) {
            set_color(u_, b, 1);
            for (int w : members)
                if (w != b) set_color(u_, w, 2);
        }
        // The block coloring alone only rainbow-connects the closed first
        // layer, so the early stop applies to radius-1 centers; with a second
        // layer present the run continues into the layer-2 machinery.
        if (covers_n1(taken_) && n2_.empty()) {
            color_n1_internal();
            finish("step2");
            return true;
        }
        return false;
    }

    // Extension block: vertices not adjacent to any block center but adjacent
    // to some non-center block member; their spokes get color 1.
    bool step3() {
        std::vector<bool> is_center(static_cast<std::size_t>(g_.vertex_count()), false);
        std::vector<bool> is_member(static_cast<std::size_t>(g_.vertex_count()), false);
        for (const auto& [b, members] : trace_.blocks) {
            is_center[static_cast<std::size_t>(b)] = true;
            for (int w : members)
                if (w != b) is_member[static_cast<std::size_t>(w)] = true;
        }
        for (int w : n1_) {
            if (taken_[static_cast<std::size_t>(w)]) continue;
            bool touches_center = false, touches_member = false;
            for (int z : g_.neighbors(w)) {
                touches_center = touches_center || is_center[static_cast<std::size_t>(z)];
                touches_member = touches_member || is_member[static_cast<std::size_t>(z)];
            }
            if (!touches_center && touches_member) trace_.extension_block.push_back(w);
        }
        for (int w : trace_.extension_block) {
            set_color(u_, w, 1);
            taken_[static_cast<std::size_t>(w)] = true;
        }
        if (covers_n1(taken_) && n2_.empty()) {
            color_n1_internal();
            finish("step3");
            return true;
        }
        for (int w : n1_)
            if (!taken_[static_cast<std::size_t>(w)]) trace_.residual.push_back(w);
        return false;
    }

    // Cover the residual spokes with shortest cycles through them, colored by
    // the appropriate pattern adapted to whatever is already colored.
    void step4() {
        covered_.assign(static_cast<std::size_t>(g_.vertex_count()), false);
        covered_[static_cast<std::size_t>(u_)] = true;
        for (int w : n1_)
            if (taken_[static_cast<std::size_t>(w)]) covered_[static_cast<std::size_t>(w)] = true;
        std::vector<int> rem = trace_.residual;
        while (!rem.empty()) {
            int v = rem.front();
            auto cycle = shortest_cycle_through(g_, u_, v, covered_);
            int variant = apply_cycle_adaptive(cycle);
            trace_.cycles.push_back({cycle, variant});
            for (int w : cycle) covered_[static_cast<std::size_t>(w)] = true;
            std::erase_if(rem, [&](int w) { return covered_[static_cast<std::size_t>(w)]; });
        }
        for (int v = 0; v < g_.vertex_count(); ++v)
            if (covered_[static_cast<std::size_t>(v)]) trace_.covered.push_back(v);
    }

    bool step5() {
        for (int w : n2_)
            if (!covered_[static_cast<std::size_t>(w)]) return false;
        color_n1_internal();
        finish("step5");
        return true;
    }

    void step6() {
        for (int w : n1_) {
            int c = color_of(u_, w);
            if (c == 0) {
                set_color(u_, w, 1); // cannot happen after steps 2-4; keep the split total
                c = 1;
            }
            if (c == 1)
                trace_.x_side.push_back(w);
            else
                trace_.y_side.push_back(w);
        }
        in_x_.assign(static_cast<std::size_t>(g_.vertex_count()), false);
        in_y_.assign(static_cast<std::size_t>(g_.vertex_count()), false);
        for (int w : trace_.x_side) in_x_[static_cast<std::size_t>(w)] = true;
        for (int w : trace_.y_side) in_y_[static_cast<std::size_t>(w)] = true;
    }

    // Largest S/T/Q classes: Q is every two-sided vertex; the one-sided
    // candidates are peeled until each S vertex keeps a T∪Q neighbor and each
    // T vertex keeps an S∪Q neighbor (greatest fixpoint).
    void step7() {
        const std::size_t n = static_cast<std::size_t>(g_.vertex_count());
        std::vector<bool> in_s(n, false), in_t(n, false), in_q(n, false);
        for (int v : n2_) {
            bool to_x = false, to_y = false;
            for (int w : g_.neighbors(v)) {
                to_x = to_x || in_x_[static_cast<std::size_t>(w)];
                to_y = to_y || in_y_[static_cast<std::size_t>(w)];
            }
            if (to_x && to_y)
                in_q[static_cast<std::size_t>(v)] = true;
            else if (to_x)
                in_s[static_cast<std::size_t>(v)] = true;
            else if (to_y)
                in_t[static_cast<std::size_t>(v)] = true;
        }
        bool changed = true;
        while (changed) {
            changed = false;
            std::vector<bool> next_s = in_s, next_t = in_t;
            for (int v : n2_) {
                if (in_s[static_cast<std::size_t>(v)]) {
                    bool supported = false;
                    for (int w : g_.neighbors(v))
                        supported = supported || (in_layer(w, 2) && (in_t[static_cast<std::size_t>(w)] ||
                                                                     in_q[static_cast<std::size_t>(w)]));
                    if (!supported) {
                        next_s[static_cast<std::size_t>(v)] = false;
                        changed = true;
                    }
                }
                if (in_t[static_cast<std::size_t>(v)]) {
                    bool supported = false;
                    for (int w : g_.neighbors(v))
                        supported = supported || (in_layer(w, 2) && (in_s[static_cast<std::size_t>(w)] ||
                                                                     in_q[static_cast<std::size_t>(w)]));
                    if (!supported) {
                        next_t[static_cast<std::size_t>(v)] = false;
                        changed = true;
                    }
                }
            }
            in_s.swap(next_s);
            in_t.swap(next_t);
        }
        in_s_ = std::move(in_s);
        in_t_ = std::move(in_t);
        in_q_ = std::move(in_q);
        for (int v : n2_) {
            if (in_s_[static_cast<std::size_t>(v)]) trace_.s_class.push_back(v);
            if (in_t_[static_cast<std::size_t>(v)]) trace_.t_class.push_back(v);
            if (in_q_[static_cast<std::size_t>(v)]) trace_.q_class.push_back(v);
        }
        // E(S∪T∪Q, X∪Y): S-X edges 3, T-Y edges 4; each Q vertex gets one
        // 3-edge into X and one 4-edge into Y, the rest 3.
        for (int s : trace_.s_class)
            for (int w : g_.neighbors(s))
                if (in_x_[static_cast<std::size_t>(w)]) set_color(s, w, 3);
        for (int t : trace_.t_class)
            for (int w : g_.neighbors(t))
                if (in_y_[static_cast<std::size_t>(w)]) set_color(t, w, 4);
        for (int q : trace_.q_class) {
            bool x_done = false, y_done = false;
            for (int w : g_.neighbors(q)) {
                if (!x_done && in_x_[static_cast<std::size_t>(w)]) {
                    set_color(q, w, 3);
                    x_done = true;
                }
                if (!y_done && in_y_[static_cast<std::size_t>(w)]) {
                    set_color(q, w, 4);
                    y_done = true;
                }
            }
            for (int w : g_.neighbors(q))
                if (in_x_[static_cast<std::size_t>(w)] || in_y_[static_cast<std::size_t>(w)])
                    set_color(q, w, 3);
        }
    }

    bool step8() {
        for (int v : n2_)
            if (!in_s_[static_cast<std::size_t>(v)] && !in_t_[static_cast<std::size_t>(v)] &&
                !in_q_[static_cast<std::size_t>(v)])
                return false;
        color_n1_internal();
        // E(S, T∪Q) per the construction, plus E(T,Q) symmetrically: a T
        // vertex whose only support is in Q needs the fifth color on that
        // first hop just as an S vertex does.
        for (int s : trace_.s_class)
            for (int w : g_.neighbors(s))
                if (in_t_[static_cast<std::size_t>(w)] || in_q_[static_cast<std::size_t>(w)])
                    set_color(s, w, 5);
        for (int t : trace_.t_class)
            for (int w : g_.neighbors(t))
                if (in_q_[static_cast<std::size_t>(w)]) set_color(t, w, 5);
        finish("step8");
        return true;
    }

    void step9() {
        for (int v : n2_) {
            if (in_s_[static_cast<std::size_t>(v)] || in_t_[static_cast<std::size_t>(v)] ||
                in_q_[static_cast<std::size_t>(v)])
                continue;
            p_.push_back(v);
            int x_edges = 0;
            for (int w : g_.neighbors(v))
                if (in_x_[static_cast<std::size_t>(w)]) ++x_edges;
            if (x_edges == 1)
                trace_.p1.push_back(v);
            else
                trace_.p2.push_back(v);
        }
    }

    void steps10to13() {
        if (trace_.p1.empty()) {
            complete_remaining();
            finish("step10");
            return;
        }
        if (trace_.x_side.size() == 1) {
            step11_blocks();
            complete_remaining();
            finish("step11");
            return;
        }
        std::vector<bool> in_residual(static_cast<std::size_t>(g_.vertex_count()), false);
        for (int w : trace_.residual) in_residual[static_cast<std::size_t>(w)] = true;
        std::vector<bool> in_p1(static_cast<std::size_t>(g_.vertex_count()), false);
        for (int w : trace_.p1) in_p1[static_cast<std::size_t>(w)] = true;
        bool exists_free_x = false;
        for (int x : trace_.x_side) {
            if (in_residual[static_cast<std::size_t>(x)]) continue;
            bool meets_p1 = false;
            for (int w : g_.neighbors(x)) meets_p1 = meets_p1 || in_p1[static_cast<std::size_t>(w)];
            if (!meets_p1) {
                exists_free_x = true;
                break;
            }
        }
        if (exists_free_x) {
            std::vector<bool> in_x1(static_cast<std::size_t>(g_.vertex_count()), false);
            for (int x : trace_.x_side) {
                bool meets_p1 = false;
                for (int w : g_.neighbors(x))
                    meets_p1 = meets_p1 || in_p1[static_cast<std::size_t>(w)];
                if (meets_p1) {
                    trace_.x1.push_back(x);
                    in_x1[static_cast<std::size_t>(x)] = true;
                }
            }
            for (int x : trace_.x_side)
                if (!in_x1[static_cast<std::size_t>(x)] && !in_residual[static_cast<std::size_t>(x)])
                    trace_.x2.push_back(x);
            for (int p : p_) {
                bool meets_x1 = false;
                for (int w : g_.neighbors(p)) meets_x1 = meets_x1 || in_x1[static_cast<std::size_t>(w)];
                if (meets_x1)
                    trace_.p1_prime.push_back(p);
                else
                    trace_.p2_prime.push_back(p);
            }
            complete_remaining();
            finish("step12");
        } else {
            complete_remaining();
            finish("step13");
        }
    }

    // |X| = 1: closed-neighborhood blocks inside P around centers d_i, colored
    // like Step 2 with the {1,2} group shifted to {3,4}.
    void step11_blocks() {
        const int x = trace_.x_side.front();
        std::vector<bool> in_p(static_cast<std::size_t>(g_.vertex_count()), false);
        for (int w : p_) in_p[static_cast<std::size_t>(w)] = true;
        std::vector<bool> d_taken(static_cast<std::size_t>(g_.vertex_count()), false);
        for (int d : p_) {
            if (d_taken[static_cast<std::size_t>(d)]) continue;
            std::vector<int> members{d};
            for (int w : g_.neighbors(d))
                if (in_p[static_cast<std::size_t>(w)] && !d_taken[static_cast<std::size_t>(w)])
                    members.push_back(w);
            if (members.size() < 2) continue;
            std::sort(members.begin(), members.end());
            for (int w : members) d_taken[static_cast<std::size_t>(w)] = true;
            trace_.d_blocks.emplace_back(d, std::move(members));
        }
        for (int w : p_)
            if (!d_taken[static_cast<std::size_t>(w)]) trace_.d_residual.push_back(w);
        for (const auto& [d, members] : trace_.d_blocks) {
            set_color(x, d, 3);
            for (int w : members)
                if (w != d) set_color(x, w, 4);
        }
        for (int w : trace_.d_residual) set_color(x, w, 3);
    }

    // Fixed completion rule for the step 10-13 cases: X-to-second-layer edges
    // get 3 (one per P2 vertex gets 4), Y-to-second-layer edges get 4, edges
    // inside N^1 get 3, edges inside N^2 get 5.
    void complete_remaining() {
        for (int p : trace_.p2) {
            for (int w : g_.neighbors(p)) {
                if (in_x_[static_cast<std::size_t>(w)] && color_of(p, w) == 0) {
                    set_color(p, w, 4);
                    break;
                }
            }
        }
        for (int x : trace_.x_side)
            for (int w : g_.neighbors(x))
                if (in_layer(w, 2)) set_color(x, w, 3);
        for (int y : trace_.y_side)
            for (int w : g_.neighbors(y))
                if (in_layer(w, 2)) set_color(y, w, 4);
        color_n1_internal();
        for (int e = 0; e < g_.edge_count(); ++e) {
            const auto& [a, b] = g_.edge(e);
            if (in_layer(a, 2) && in_layer(b, 2) && colors_[static_cast<std::size_t>(e)] == 0)
                colors_[static_cast<std::size_t>(e)] = 5;
        }
    }

    bool covers_n1(const std::vector<bool>& taken) const {
        for (int w : n1_)
            if (!taken[static_cast<std::size_t>(w)]) return false;
        return true;
    }

    // Instantiates the pattern on the cycle's uncolored edges, permuting
    // within the {1,2} and {3,4} groups (cycle reversal, and the 3-or-4 side
    // of a triangle) to agree with already-colored edges where possible.
    int apply_cycle_adaptive(const std::vector<int>& cycle) {
        const int len = static_cast<int>(cycle.size());
        std::vector<int> forward(cycle);
        std::vector<int> reversed{cycle.front()};
        for (int i = len - 1; i >= 1; --i) reversed.push_back(cycle[static_cast<std::size_t>(i)]);

        struct Candidate {
            const std::vector<int>* order;
            int side;
        };
        std::vector<Candidate> candidates;
        if (len == 3) {
            candidates = {{&forward, 3}, {&forward, 4}, {&reversed, 3}, {&reversed, 4}};
        } else {
            candidates = {{&forward, 3}, {&reversed, 3}};
        }
        int best_score = -1;
        const Candidate* best = nullptr;
        for (const auto& cand : candidates) {
            int score = 0;
            for (const auto& pe : base_pattern(len, cand.side)) {
                int a = (*cand.order)[static_cast<std::size_t>(pe.from)];
                int b = (*cand.order)[static_cast<std::size_t>(pe.to)];
                if (color_of(a, b) == pe.color) ++score;
            }
            if (score > best_score) {
                best_score = score;
                best = &cand;
            }
        }
        for (const auto& pe : base_pattern(len, best->side)) {
            int a = (*best->order)[static_cast<std::size_t>(pe.from)];
            int b = (*best->order)[static_cast<std::size_t>(pe.to)];
            set_color(a, b, pe.color);
        }
        return len;
    }

    const Graph& g_;
    int u_;
    std::vector<int> layer_;
    std::vector<int> n1_, n2_;
    std::vector<int> colors_;
    std::vector<int> p_;
    std::vector<bool> taken_, covered_, in_x_, in_y_, in_s_, in_t_, in_q_;
    ColoringTrace trace_;
};

// Verification with bounded repair, certificate construction, and the final
// invariant checks shared by both branches.
ColorResult finish_result(const Graph& g, std::vector<int> colors, ColoringTrace trace,
                          int palette_bound) {
    EdgeColoring coloring;
    coloring.colors = std::move(colors);
    coloring.palette = palette_bound;

    const int m = g.edge_count();
    const int cap = 50 * std::max(1, m);
    int attempts = 0;
    while (auto failing = first_failing_pair(g, coloring)) {
        if (attempts >= cap) {
            trace.repair_iterations = attempts;
            throw CompletionFailedError(
                std::move(trace), "repair cap reached; pair (" + std::to_string(failing->first) +
                                      "," + std::to_string(failing->second) + ") stays unconnected");
        }
        auto path = shortest_path(g, failing->first, failing->second);
        int pos = attempts % static_cast<int>(path.size() - 1);
        int e = g.edge_index(path[static_cast<std::size_t>(pos)],
                             path[static_cast<std::size_t>(pos) + 1]);
        coloring.colors[static_cast<std::size_t>(e)] =
            coloring.colors[static_cast<std::size_t>(e)] % palette_bound + 1;
        ++attempts;
    }
    trace.repair_iterations = attempts;

    coloring.palette = *std::max_element(coloring.colors.begin(), coloring.colors.end());
    auto outcome = is_rainbow_connected(g, coloring);
    ColorResult result;
    result.coloring = std::move(coloring);
    result.colors_used = result.coloring.colors_used();
    result.trace = std::move(trace);
    result.certificate = std::move(outcome.certificate);
    return result;
}

struct PendantStructure {
    int leaf = -1;
    int core_center = -1;
};

// Exactly one bridge, whose removal leaves a degree-1 leaf and a bridgeless
// core of radius 1 centered at the bridge's internal endpoint.
std::optional<PendantStructure> detect_pendant(const Graph& g) {
    if (g.vertex_count() < 3) return std::nullopt;
    auto br = bridges(g); // throws Disconnected
    if (br.size() != 1) return std::nullopt;
    auto [a, b] = br.front();
    PendantStructure ps;
    if (g.degree(b) == 1) {
        ps.leaf = b;
        ps.core_center = a;
    } else if (g.degree(a) == 1) {
        ps.leaf = a;
        ps.core_center = b;
    } else {
        return std::nullopt;
    }
    std::vector<int> keep;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (v != ps.leaf) keep.push_back(v);
    auto sub = induced_subgraph(g, keep);
    if (!bridges(sub.graph).empty()) return std::nullopt;
    auto dist = bfs_distances(sub.graph, sub.from_parent[static_cast<std::size_t>(ps.core_center)]);
    int ecc = 0;
    for (int d : dist) ecc = std::max(ecc, d);
    if (ecc != 1) return std::nullopt;
    return ps;
}

} // namespace

ColorResult color_bridgeless_diam2(const Graph& g) {
    if (g.vertex_count() < 3) fail(Errc::not_diameter2, "need at least 3 vertices");
    CenterMetrics met = metrics(g); // throws Disconnected
    if (!bridges(g).empty()) fail(Errc::has_bridge, "input has a bridge");
    if (met.diameter > 2)
        fail(Errc::not_diameter2, "diameter is " + std::to_string(met.diameter));
    ColoringRun run(g, met.centers.front());
    run.run();
    return finish_result(g, std::move(run).take_colors(), std::move(run).take_trace(), 5);
}

ColorResult color_radius1_pendant(const Graph& g) {
    auto ps = detect_pendant(g);
    if (!ps)
        fail(Errc::not_pendant_structure,
             "not a bridgeless radius-1 core with one pendant edge at its center");
    std::vector<int> keep;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (v != ps->leaf) keep.push_back(v);
    auto sub = induced_subgraph(g, keep);
    ColoringRun run(sub.graph, sub.from_parent[static_cast<std::size_t>(ps->core_center)]);
    run.run();
    auto sub_colors = std::move(run).take_colors();
    auto trace = std::move(run).take_trace();
    trace.remap(sub.to_parent);

    std::vector<int> colors(static_cast<std::size_t>(g.edge_count()), 0);
    for (int e = 0; e < sub.graph.edge_count(); ++e) {
        const auto& [a, b] = sub.graph.edge(e);
        int parent_edge = g.edge_index(sub.to_parent[static_cast<std::size_t>(a)],
                                       sub.to_parent[static_cast<std::size_t>(b)]);
        colors[static_cast<std::size_t>(parent_edge)] = sub_colors[static_cast<std::size_t>(e)];
    }
    colors[static_cast<std::size_t>(g.edge_index(ps->leaf, ps->core_center))] = 4;
    return finish_result(g, std::move(colors), std::move(trace), 4);
}

ColorResult color_rc2(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2) fail(Errc::not_rc2_structure, "fewer than 2 vertices");
    CenterMetrics met = metrics(g); // throws Disconnected

    if (n == 2) {
        ColoringTrace trace;
        trace.center = met.centers.front();
        trace.completion_case = "degenerate_k2";
        return finish_result(g, std::vector<int>{1}, std::move(trace), 1);
    }
    if (n == 3 && g.edge_count() == 2) {
        ColoringTrace trace;
        trace.center = met.centers.front();
        trace.completion_case = "degenerate_p3";
        return finish_result(g, std::vector<int>{1, 2}, std::move(trace), 2);
    }

    auto br = bridges(g);
    if (br.empty() && met.diameter == 2) return color_bridgeless_diam2(g);
    if (br.size() == 1 && detect_pendant(g)) return color_radius1_pendant(g);
    fail(Errc::not_rc2_structure,
         "neither bridgeless with diameter 2 nor a radius-1 core with a pendant edge");
}

} // namespace rainbow
