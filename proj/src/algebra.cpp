#include "ghom/algebra.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

#include "ghom/canonical.hpp"
#include "ghom/contract.hpp"
#include "ghom/enumerate.hpp"
#include "ghom/sign.hpp"
#include "json.hpp"

namespace gh {

namespace {

constexpr char kSeqSep = '|';
constexpr char kBarSep = '!';

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    size_t start = 0;
    while (true) {
        const size_t pos = text.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(text.substr(start));
            return parts;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

// Component ids of the graph with `skip` vertices removed (-1: keep). Removed
// vertices get id -1; loop edges never join anything.
std::vector<int> components_without(const LabeledGraph& g, int skip1, int skip2) {
    const int nv = g.num_vertices();
    std::vector<int> parent(nv);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    auto skipped = [&](int v) { return v == skip1 || v == skip2; };
    for (const Edge& e : g.edges) {
        if (e.is_loop() || skipped(e.src) || skipped(e.dst)) continue;
        parent[find(e.src)] = find(e.dst);
    }
    std::vector<int> id(nv, -1);
    int next = 0;
    for (int v = 0; v < nv; ++v) {
        if (skipped(v)) continue;
        const int root = find(v);
        if (id[root] < 0) id[root] = next++;
        id[v] = id[root];
    }
    return id;
}

int num_ids(const std::vector<int>& ids) {
    int count = 0;
    for (int id : ids) count = std::max(count, id + 1);
    return count;
}

bool induced_connected(const LabeledGraph& g, unsigned mask) {
    const int nv = g.num_vertices();
    std::vector<int> parent(nv);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const Edge& e : g.edges) {
        if ((mask >> e.src & 1u) && (mask >> e.dst & 1u)) parent[find(e.src)] = find(e.dst);
    }
    int root = -1;
    for (int v = 0; v < nv; ++v) {
        if (!(mask >> v & 1u)) continue;
        if (root < 0) root = find(v);
        if (find(v) != root) return false;
    }
    return true;
}

int parity_sign(long long exponent) { return ((exponent % 2) + 2) % 2 == 0 ? 1 : -1; }

}  // namespace

std::string encode_sequence(const std::vector<LabeledGraph>& seq) {
    std::string key;
    for (size_t i = 0; i < seq.size(); ++i) {
        if (i) key.push_back(kSeqSep);
        key += encode(seq[i]);
    }
    return key;
}

std::vector<LabeledGraph> decode_sequence(const std::string& key) {
    std::vector<LabeledGraph> seq;
    if (key.empty()) return seq;
    for (const std::string& part : split(key, kSeqSep)) seq.push_back(decode(part));
    return seq;
}

int sequence_norm_deg(const std::vector<LabeledGraph>& seq, const Ambient& amb) {
    int total = 0;
    for (const LabeledGraph& g : seq) total += grading(g, amb).norm_deg;
    return total;
}

int sequence_order(const std::vector<LabeledGraph>& seq) {
    int total = 0;
    for (const LabeledGraph& g : seq) total += g.count_edges(EdgeKind::Dashed) - g.count_vertices(VertexKind::White);
    return total;
}

int sequence_loops(const std::vector<LabeledGraph>& seq) {
    int total = 0;
    for (const LabeledGraph& g : seq) total += g.betti();
    return total;
}

bool is_unit_graph(const LabeledGraph& graph) {
    if (graph.num_vertices() != 2 || graph.num_edges() != 1) return false;
    const Edge& e = graph.edges[0];
    if (e.is_loop()) return false;
    if (e.kind == EdgeKind::Solid) return true;
    return graph.vertices[0] == VertexKind::White || graph.vertices[1] == VertexKind::White;
}

bool rescaling_zero(const LabeledGraph& graph) {
    const int nv = graph.num_vertices();
    for (int v = 0; v < nv; ++v) {
        const std::vector<int> ids = components_without(graph, v, v);
        const int count = num_ids(ids);
        if (count < 2) continue;
        if (is_black(graph.vertices[v])) return true;
        std::vector<bool> all_white(count, true);
        for (int u = 0; u < nv; ++u) {
            if (ids[u] >= 0 && is_black(graph.vertices[u])) all_white[ids[u]] = false;
        }
        for (int c = 0; c < count; ++c) {
            if (all_white[c]) return true;
        }
    }
    return false;
}

namespace {

// Single reattachment moves from one canonical orbit member: pairs of
// (canonicalized reattached graph, sign with [source] = sign * [target]).
// Sets `zero` when some move lands on a graph that vanishes outright.
struct MoveSet {
    std::vector<SignedClass> moves;
    bool zero = false;
};

MoveSet reattachment_moves(const LabeledGraph& graph, const Ambient& amb) {
    MoveSet out;
    const int nv = graph.num_vertices();
    for (int v1 = 0; v1 < nv; ++v1) {
        for (int v2 = v1; v2 < nv; ++v2) {
            const std::vector<int> ids = components_without(graph, v1, v2);
            const int count = num_ids(ids);
            // Reattaching about a single non-cut vertex is the trivial
            // decomposition with nothing on the other side; skip it.
            if (v1 == v2 && count < 2) continue;
            const bool white_end = graph.vertices[v1] == VertexKind::White ||
                                   graph.vertices[v2] == VertexKind::White;
            for (int c = 0; c < count; ++c) {
                bool ok = true;
                if (white_end) {
                    for (int u = 0; u < nv && ok; ++u) {
                        if (ids[u] == c && is_black(graph.vertices[u])) ok = false;
                    }
                }
                if (!ok) continue;
                long long exponent = 0;
                for (int u = 0; u < nv; ++u) {
                    if (ids[u] == c) exponent += is_black(graph.vertices[u]) ? amb.j : amb.n;
                }
                LabeledGraph rev = graph;
                for (Edge& e : rev.edges) {
                    const bool meets = (ids[e.src] == c) || (ids[e.dst] == c);
                    if (!meets) continue;
                    exponent += e.kind == EdgeKind::Dashed ? amb.n : amb.j;
                    if (e.src == v1) {
                        e.src = v2;
                    } else if (e.src == v2) {
                        e.src = v1;
                    }
                    if (e.dst == v1) {
                        e.dst = v2;
                    } else if (e.dst == v2) {
                        e.dst = v1;
                    }
                }
                rev = reclassify_blacks(rev);
                if (rev.has_double_edge()) {
                    out.zero = true;
                    return out;
                }
                bool has_ext = false;
                for (VertexKind k : rev.vertices) has_ext = has_ext || k == VertexKind::ExtBlack;
                if (!has_ext && rev.num_vertices() >= 3) {
                    out.zero = true;
                    return out;
                }
                SignedClass cls = canonicalize(rev, amb);
                if (cls.zero || rescaling_zero(cls.graph)) {
                    out.zero = true;
                    return out;
                }
                cls.sign *= parity_sign(exponent);
                out.moves.push_back(std::move(cls));
            }
        }
    }
    return out;
}

}  // namespace

SignedClass symmetry_reduce(const LabeledGraph& graph, const Ambient& amb) {
    struct OrbitResult {
        std::string rep;  // empty when the orbit is zero
        int sign = 1;
    };
    static std::mutex cache_mutex;
    static std::map<std::string, OrbitResult> cache;

    // Everything here depends on (n, j) through their parities only.
    const std::string tag = std::string(1, '0' + (amb.n & 1)) + char('0' + (amb.j & 1)) + '@';
    const std::string start_key = encode(graph);
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(tag + start_key);
        if (it != cache.end()) {
            SignedClass out;
            out.zero = it->second.rep.empty();
            if (!out.zero) {
                out.graph = decode(it->second.rep);
                out.sign = it->second.sign;
            }
            return out;
        }
    }

    // BFS closure of the moves; orbit[key] = sign with [start] = sign * [key].
    std::map<std::string, std::pair<LabeledGraph, int>> orbit;
    std::vector<std::string> frontier{start_key};
    orbit.emplace(start_key, std::make_pair(graph, 1));
    bool zero = false;
    while (!frontier.empty() && !zero) {
        const std::string key = std::move(frontier.back());
        frontier.pop_back();
        const auto& [member, member_sign] = orbit.at(key);
        const MoveSet ms = reattachment_moves(member, amb);
        if (ms.zero) {
            zero = true;
            break;
        }
        for (const SignedClass& mv : ms.moves) {
            const int sign = member_sign * mv.sign;
            const std::string mkey = encode(mv.graph);
            auto [it, fresh] = orbit.emplace(mkey, std::make_pair(mv.graph, sign));
            if (fresh) {
                frontier.push_back(mkey);
            } else if (it->second.second != sign) {
                zero = true;
                break;
            }
        }
    }

    OrbitResult result;
    if (!zero) {
        const auto& [rep_key, rep_entry] = *orbit.begin();
        result.rep = rep_key;
        result.sign = rep_entry.second;
    }
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        if (zero) {
            for (const auto& [key, entry] : orbit) cache[tag + key] = OrbitResult{};
        } else {
            for (const auto& [key, entry] : orbit) {
                // [start] = s_key * [key] and [start] = s_rep * [rep], so
                // [key] = s_key * s_rep * [rep] for signs in {+1, -1}.
                cache[tag + key] = OrbitResult{result.rep, entry.second * result.sign};
            }
        }
    }

    SignedClass out;
    out.zero = zero;
    if (!zero) {
        out.graph = orbit.at(result.rep).first;
        out.sign = result.sign;
    }
    return out;
}

bool symmetry_zero(const LabeledGraph& graph, const Ambient& amb) {
    return symmetry_reduce(graph, amb).zero;
}

GraphReduction reduce_graph(const LabeledGraph& graph, const Ambient& amb) {
    amb.require_valid();
    LabeledGraph g = reclassify_blacks(graph);
    if (auto err = structure_error(g, Flavor::Generalized)) {
        throw std::invalid_argument("algebra graph rejected: " + *err);
    }
    if (!g.is_connected() || g.num_vertices() == 0) {
        throw std::invalid_argument("algebra graphs must be connected and nonempty");
    }
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (g.incident_degree(v, EdgeKind::Dashed) + g.incident_degree(v, EdgeKind::Solid) == 0) {
            throw std::invalid_argument("algebra graphs have no isolated vertices");
        }
    }
    GraphReduction out;
    if (grading(g, amb).norm_deg < 0) return out;
    if (g.has_double_edge() || g.has_loop_edge()) return out;
    bool has_ext = false;
    for (VertexKind k : g.vertices) has_ext = has_ext || k == VertexKind::ExtBlack;
    if (!has_ext && g.num_vertices() >= 3) return out;
    const SignedClass cls = canonicalize(g, amb);
    if (cls.zero) return out;
    if (is_unit_graph(cls.graph)) {
        out.kind = GraphReduction::Kind::Unit;
        out.sign = cls.sign;
        return out;
    }
    if (rescaling_zero(cls.graph)) return out;
    const SignedClass orbit = symmetry_reduce(cls.graph, amb);
    if (orbit.zero) return out;
    out.kind = GraphReduction::Kind::Graph;
    out.graph = orbit.graph;
    out.sign = cls.sign * orbit.sign;
    return out;
}

FormalSum normalize_sequence(const std::vector<LabeledGraph>& seq, const mpq_class& coeff,
                             const Ambient& amb) {
    FormalSum out;
    if (coeff == 0) return out;
    mpq_class c = coeff;
    std::vector<std::pair<std::string, int>> kept;  // (key, normalized degree)
    long long total = 0;
    for (const LabeledGraph& raw : seq) {
        const GraphReduction r = reduce_graph(raw, amb);
        if (r.kind == GraphReduction::Kind::Zero) return out;
        c *= r.sign;
        if (r.kind == GraphReduction::Kind::Unit) continue;
        const int nd = grading(r.graph, amb).norm_deg;
        total += nd;
        kept.emplace_back(encode(r.graph), nd);
    }
    if (total > static_cast<long long>(amb.n) * amb.j - 1) return out;
    int sign = 1;
    for (size_t i = 1; i < kept.size(); ++i) {
        for (size_t t = i; t > 0 && kept[t].first < kept[t - 1].first; --t) {
            if (kept[t].second % 2 != 0 && kept[t - 1].second % 2 != 0) sign = -sign;
            std::swap(kept[t], kept[t - 1]);
        }
    }
    for (size_t i = 1; i < kept.size(); ++i) {
        if (kept[i].first == kept[i - 1].first && kept[i].second % 2 != 0) return out;
    }
    std::string key;
    for (size_t i = 0; i < kept.size(); ++i) {
        if (i) key.push_back(kSeqSep);
        key += kept[i].first;
    }
    out.add(key, c * sign);
    return out;
}

FormalSum normalize_algebra(const FormalSum& raw, const Ambient& amb) {
    FormalSum out;
    for (const auto& [key, coeff] : raw.terms) {
        out += normalize_sequence(decode_sequence(key), coeff, amb);
    }
    return out;
}

FormalSum d_sequence_raw(const std::vector<LabeledGraph>& seq, const mpq_class& coeff,
                         const Ambient& amb) {
    FormalSum out;
    if (coeff == 0) return out;
    int prefix = 1;
    for (size_t i = 0; i < seq.size(); ++i) {
        const LabeledGraph& g = seq[i];
        const int nd = grading(g, amb).norm_deg;
        const int nv = g.num_vertices();
        if (nv > 2 && nd >= 0 && nv < 31) {
            const unsigned full = (1u << nv) - 1;
            for (unsigned mask = 1; mask < full; ++mask) {
                if (std::popcount(mask) < 2) continue;
                if (!induced_connected(g, mask)) continue;
                std::vector<int> labels;
                for (int v = 0; v < nv; ++v) {
                    if (mask >> v & 1u) labels.push_back(v);
                }
                const std::vector<int> ordered = ordered_subset(g, labels);
                const int sigma = subset_contraction_sign_closed(g, ordered, amb);
                const SubsetSplit parts = subset_split(g, ordered);
                std::vector<LabeledGraph> spliced;
                spliced.reserve(seq.size() + 1);
                spliced.insert(spliced.end(), seq.begin(), seq.begin() + i);
                spliced.push_back(parts.quotient);
                spliced.push_back(parts.induced);
                spliced.insert(spliced.end(), seq.begin() + i + 1, seq.end());
                out += normalize_sequence(spliced, coeff * prefix * sigma, amb);
            }
        }
        if (nd % 2 != 0) prefix = -prefix;
    }
    return out;
}

FormalSum d_algebra(const FormalSum& elem, const Ambient& amb) {
    FormalSum out;
    for (const auto& [key, coeff] : elem.terms) {
        out += d_sequence_raw(decode_sequence(key), coeff, amb);
    }
    return out;
}

namespace {

void require_algebra_range(int g, const Ambient& amb) {
    if (amb.j == 2 && g > 3) {
        throw std::invalid_argument("the algebra layer is restricted to g <= 3 when j == 2");
    }
    if (amb.j == 1) {
        throw std::invalid_argument("the algebra layer requires j >= 2");
    }
}

}  // namespace

std::vector<LabeledGraph> algebra_graph_basis(int k, int g, const Ambient& amb,
                                              long long* budget) {
    amb.require_valid();
    require_algebra_range(g, amb);
    std::vector<LabeledGraph> basis;
    std::set<std::string> seen;
    for (const LabeledGraph& cand : enumerate_basis(ComplexKind::AlgebraGen, k, g, amb, budget)) {
        const GraphReduction r = reduce_graph(cand, amb);
        if (r.kind != GraphReduction::Kind::Graph) continue;
        if (seen.insert(encode(r.graph)).second) basis.push_back(r.graph);
    }
    std::sort(basis.begin(), basis.end(), [](const LabeledGraph& a, const LabeledGraph& b) {
        return encode(a) < encode(b);
    });
    return basis;
}

namespace {

struct PoolEntry {
    std::string key;
    int k = 0;
    int g = 0;
    int nd = 0;
};

// Graphs of order 1..k and loop number 0..g, sorted by key: the alphabet for
// sequences and bar letters.
std::vector<PoolEntry> graph_pool(int k, int g, const Ambient& amb, long long* budget) {
    std::vector<PoolEntry> pool;
    for (int kk = 1; kk <= k; ++kk) {
        for (int gg = 0; gg <= g; ++gg) {
            for (const LabeledGraph& graph : algebra_graph_basis(kk, gg, amb, budget)) {
                pool.push_back({encode(graph), kk, gg, grading(graph, amb).norm_deg});
            }
        }
    }
    std::sort(pool.begin(), pool.end(),
              [](const PoolEntry& a, const PoolEntry& b) { return a.key < b.key; });
    return pool;
}

void sequence_rec(const std::vector<PoolEntry>& pool, size_t from, int k_left, int g_left,
                  long long nd_left, std::vector<std::string>& stack,
                  std::vector<std::string>& out, long long* budget) {
    if (budget && --(*budget) < 0) throw BudgetExceeded("sequence enumeration budget exceeded");
    if (k_left == 0 && g_left == 0) {
        std::string key;
        for (size_t i = 0; i < stack.size(); ++i) {
            if (i) key.push_back(kSeqSep);
            key += stack[i];
        }
        out.push_back(std::move(key));
        return;
    }
    for (size_t i = from; i < pool.size(); ++i) {
        const PoolEntry& e = pool[i];
        if (e.k > k_left || e.g > g_left || e.nd > nd_left) continue;
        stack.push_back(e.key);
        // An odd-degree graph squares to zero, so it may not repeat.
        sequence_rec(pool, e.nd % 2 != 0 ? i + 1 : i, k_left - e.k, g_left - e.g, nd_left - e.nd,
                     stack, out, budget);
        stack.pop_back();
    }
}

}  // namespace

std::vector<std::string> algebra_sequence_basis(int k, int g, const Ambient& amb,
                                                long long* budget) {
    amb.require_valid();
    require_algebra_range(g, amb);
    std::vector<std::string> out;
    if (k == 0) {
        if (g == 0) out.push_back("");
        return out;
    }
    if (g < 0 || k < 0) return out;
    const std::vector<PoolEntry> pool = graph_pool(k, g, amb, budget);
    std::vector<std::string> stack;
    sequence_rec(pool, 0, k, g, static_cast<long long>(amb.n) * amb.j - 1, stack, out, budget);
    std::sort(out.begin(), out.end());
    return out;
}

std::string encode_bar(const BarWord& word) {
    std::string key = encode_sequence(word.a0);
    for (const auto& letter : word.letters) {
        key.push_back(kBarSep);
        key += encode_sequence(letter);
    }
    return key;
}

BarWord decode_bar(const std::string& key) {
    BarWord word;
    const std::vector<std::string> parts = split(key, kBarSep);
    word.a0 = decode_sequence(parts[0]);
    for (size_t i = 1; i < parts.size(); ++i) {
        word.letters.push_back(decode_sequence(parts[i]));
    }
    return word;
}

int bar_degree(const BarWord& word, const Ambient& amb) {
    int deg = sequence_norm_deg(word.a0, amb);
    for (const auto& letter : word.letters) deg += sequence_norm_deg(letter, amb) - 1;
    return deg;
}

int bar_order(const BarWord& word) {
    int k = sequence_order(word.a0);
    for (const auto& letter : word.letters) k += sequence_order(letter);
    return k;
}

int bar_loops(const BarWord& word) {
    int g = sequence_loops(word.a0);
    for (const auto& letter : word.letters) g += sequence_loops(letter);
    return g;
}

FormalSum normalize_bar(const BarWord& word, const mpq_class& coeff, const Ambient& amb) {
    FormalSum out;
    if (coeff == 0) return out;
    const FormalSum a0 = normalize_sequence(word.a0, coeff, amb);
    if (a0.is_zero()) return out;
    std::string key = a0.terms.begin()->first;
    mpq_class c = a0.terms.begin()->second;
    for (const auto& letter : word.letters) {
        const FormalSum l = normalize_sequence(letter, 1, amb);
        if (l.is_zero()) return out;
        const std::string& lk = l.terms.begin()->first;
        if (lk.empty()) return out;  // unit letters have no augmentation-ideal part
        c *= l.terms.begin()->second;
        key.push_back(kBarSep);
        key += lk;
    }
    out.add(key, c);
    return out;
}

FormalSum bar_diff(const FormalSum& elem, const Ambient& amb) {
    FormalSum out;
    for (const auto& [key, coeff] : elem.terms) {
        const BarWord w = decode_bar(key);
        const size_t L = w.letters.size();
        const int nd0 = sequence_norm_deg(w.a0, amb);
        std::vector<int> ndl(L);
        for (size_t i = 0; i < L; ++i) ndl[i] = sequence_norm_deg(w.letters[i], amb);

        auto assemble = [&](const std::string& a0_key, size_t drop_from, size_t drop_count,
                            const std::string& replacement) {
            std::string k = a0_key;
            for (size_t i = 0; i < L; ++i) {
                if (i == drop_from && drop_count > 0) {
                    if (!replacement.empty()) {
                        k.push_back(kBarSep);
                        k += replacement;
                    }
                    i += drop_count - 1;
                    continue;
                }
                k.push_back(kBarSep);
                k += encode_sequence(w.letters[i]);
            }
            return k;
        };
        const std::string a0_key = encode_sequence(w.a0);

        // Algebra differential of a0.
        for (const auto& [dk, dc] : d_sequence_raw(w.a0, coeff, amb).terms) {
            out.add(assemble(dk, L, 0, ""), dc);
        }
        // Algebra differential of each letter, crossing a0 and the earlier
        // suspended letters.
        long long nu = 0;
        for (size_t i = 0; i < L; ++i) {
            const int sg = parity_sign(nd0 + nu + 1);
            for (const auto& [dk, dc] : d_sequence_raw(w.letters[i], coeff * sg, amb).terms) {
                if (dk.empty()) throw std::logic_error("letter differential produced the unit");
                out.add(assemble(a0_key, i, 1, dk), dc);
            }
            nu += ndl[i] - 1;
        }
        // Merges of adjacent parts; the i = 0 merge multiplies a0 into the
        // first letter.
        nu = 0;
        for (size_t i = 0; i < L; ++i) {
            if (i >= 1) nu += ndl[i - 1] - 1;
            const int sg = parity_sign(nd0 + nu + 1);
            std::vector<LabeledGraph> merged =
                i == 0 ? w.a0 : w.letters[i - 1];
            merged.insert(merged.end(), w.letters[i].begin(), w.letters[i].end());
            for (const auto& [mk, mc] : normalize_sequence(merged, coeff * sg, amb).terms) {
                if (i == 0) {
                    out.add(assemble(mk, 0, 1, ""), mc);
                } else {
                    if (mk.empty()) throw std::logic_error("letter merge produced the unit");
                    out.add(assemble(a0_key, i - 1, 2, mk), mc);
                }
            }
        }
    }
    return out;
}

FormalSum bar_product(const FormalSum& a, const FormalSum& b, const Ambient& amb) {
    FormalSum out;
    for (const auto& [ka, ca] : a.terms) {
        const BarWord wa = decode_bar(ka);
        const size_t l = wa.letters.size();
        long long nu_l = 0;
        std::vector<int> deg_a(l);
        for (size_t i = 0; i < l; ++i) {
            deg_a[i] = sequence_norm_deg(wa.letters[i], amb) - 1;
            nu_l += deg_a[i];
        }
        for (const auto& [kb, cb] : b.terms) {
            const BarWord wb = decode_bar(kb);
            const size_t m = wb.letters.size();
            std::vector<int> degrees(deg_a);
            for (size_t i = 0; i < m; ++i) {
                degrees.push_back(sequence_norm_deg(wb.letters[i], amb) - 1);
            }
            const int front =
                parity_sign(nu_l * sequence_norm_deg(wb.a0, amb));
            std::vector<LabeledGraph> a0b0 = wa.a0;
            a0b0.insert(a0b0.end(), wb.a0.begin(), wb.a0.end());
            const FormalSum head = normalize_sequence(a0b0, ca * cb * front, amb);
            if (head.is_zero()) continue;
            const std::string& head_key = head.terms.begin()->first;
            const mpq_class& head_coeff = head.terms.begin()->second;

            // All (l, m)-shuffles as bitmasks choosing the slots of the first
            // word's letters.
            const size_t total = l + m;
            for (unsigned mask = 0; mask < (1u << total); ++mask) {
                if (static_cast<size_t>(std::popcount(mask)) != l) continue;
                std::vector<int> order;
                order.reserve(total);
                size_t ai = 0, bi = 0;
                for (size_t t = 0; t < total; ++t) {
                    if (mask >> t & 1u) {
                        order.push_back(static_cast<int>(ai++));
                    } else {
                        order.push_back(static_cast<int>(l + bi++));
                    }
                }
                const int eps = koszul_sign_of_order(degrees, order);
                std::string key = head_key;
                for (size_t t = 0; t < total; ++t) {
                    key.push_back(kBarSep);
                    const int src = order[t];
                    key += encode_sequence(src < static_cast<int>(l)
                                               ? wa.letters[src]
                                               : wb.letters[src - l]);
                }
                out.add(key, head_coeff * eps);
            }
        }
    }
    return out;
}

FormalSum bar_homotopy(const FormalSum& elem, const Ambient& amb) {
    FormalSum out;
    for (const auto& [key, coeff] : elem.terms) {
        const BarWord w = decode_bar(key);
        if (w.a0.empty()) continue;  // the unit component of a0 is projected away
        std::string k;
        k.push_back(kBarSep);
        k += encode_sequence(w.a0);
        for (const auto& letter : w.letters) {
            k.push_back(kBarSep);
            k += encode_sequence(letter);
        }
        out.add(k, -coeff);
    }
    return out;
}

namespace {

void bar_letters_rec(const std::vector<std::vector<std::string>>& seqs_by_kg, int k_max, int g_max,
                     int k_left, int g_left, std::string& word, std::vector<std::string>& out,
                     long long* budget) {
    if (budget && --(*budget) < 0) throw BudgetExceeded("bar enumeration budget exceeded");
    if (k_left == 0 && g_left == 0) {
        out.push_back(word);
        return;
    }
    for (int kk = 1; kk <= k_left; ++kk) {
        for (int gg = 0; gg <= g_left; ++gg) {
            for (const std::string& seq : seqs_by_kg[kk * (g_max + 1) + gg]) {
                const size_t saved = word.size();
                word.push_back(kBarSep);
                word += seq;
                bar_letters_rec(seqs_by_kg, k_max, g_max, k_left - kk, g_left - gg, word, out,
                                budget);
                word.resize(saved);
            }
        }
    }
}

}  // namespace

std::vector<std::string> bar_basis(int k, int g, const Ambient& amb, long long* budget) {
    amb.require_valid();
    require_algebra_range(g, amb);
    std::vector<std::vector<std::string>> seqs_by_kg((k + 1) * (g + 1));
    for (int kk = 0; kk <= k; ++kk) {
        for (int gg = 0; gg <= g; ++gg) {
            seqs_by_kg[kk * (g + 1) + gg] = algebra_sequence_basis(kk, gg, amb, budget);
        }
    }
    std::vector<std::string> out;
    std::string word;
    for (int k0 = 0; k0 <= k; ++k0) {
        for (int g0 = 0; g0 <= g; ++g0) {
            for (const std::string& head : seqs_by_kg[k0 * (g + 1) + g0]) {
                word = head;
                bar_letters_rec(seqs_by_kg, k, g, k - k0, g - g0, word, out, budget);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::map<int, std::vector<std::string>> bar_graded_basis(int k, int g,
                                                         const Ambient& amb,
                                                         long long* budget) {
    std::map<int, std::vector<std::string>> out;
    for (std::string& key : bar_basis(k, g, amb, budget))
        out[bar_degree(decode_bar(key), amb)].push_back(std::move(key));
    return out;
}

PresentedComplex bar_presented_complex(int k, int g, const Ambient& amb,
                                       long long* budget) {
    auto basis = bar_graded_basis(k, g, amb, budget);
    PresentedComplex cx;
    if (basis.empty()) return cx;
    cx.lo = basis.begin()->first;
    cx.hi = basis.rbegin()->first;

    std::map<int, std::map<std::string, int>> index;
    for (const auto& [deg, words] : basis) {
        cx.basis[deg] = static_cast<int>(words.size());
        auto& idx = index[deg];
        for (int i = 0; i < static_cast<int>(words.size()); ++i)
            idx[words[i]] = i;
    }

    for (const auto& [deg, words] : basis) {
        auto target = index.find(deg + 1);
        SparseMatQ mat(target == index.end()
                           ? 0
                           : static_cast<int>(target->second.size()),
                       static_cast<int>(words.size()));
        for (int col = 0; col < static_cast<int>(words.size()); ++col) {
            FormalSum gen;
            gen.add(words[col], 1);
            auto d = bar_diff(gen, amb);
            if (budget) {
                *budget -= 1 + static_cast<long long>(d.terms.size());
                if (*budget < 0) throw BudgetExceeded("differential assembly");
            }
            if (d.is_zero()) continue;
            if (target == index.end())
                throw std::logic_error("differential escapes basis range");
            for (const auto& [key, coeff] : d.terms) {
                auto it = target->second.find(key);
                if (it == target->second.end())
                    throw std::logic_error("differential escapes basis");
                mat.add(it->second, col, coeff);
            }
        }
        cx.diff.emplace(deg, std::move(mat));
    }
    return cx;
}

std::string algebra_to_json(const FormalSum& elem) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& [key, coeff] : elem.terms) {
        nlohmann::ordered_json term;
        term["coeff"] = coeff.get_str();
        auto& seq = term["sequence"] = nlohmann::ordered_json::array();
        for (const LabeledGraph& g : decode_sequence(key)) {
            seq.push_back(nlohmann::ordered_json::parse(to_json(g, Flavor::Generalized)));
        }
        out.push_back(std::move(term));
    }
    return out.dump();
}

FormalSum algebra_from_json(const std::string& text) {
    FormalSum out;
    const auto in = nlohmann::json::parse(text);
    if (!in.is_array()) throw std::invalid_argument("algebra element JSON must be a list");
    for (const auto& term : in) {
        std::vector<LabeledGraph> seq;
        for (const auto& jg : term.at("sequence")) {
            seq.push_back(graph_from_json(jg.dump()));
        }
        out.add(encode_sequence(seq), mpq_class(term.at("coeff").get<std::string>()));
    }
    return out;
}

std::string bar_word_to_json(const BarWord& word) {
    nlohmann::ordered_json out;
    FormalSum a0;
    a0.add(encode_sequence(word.a0), 1);
    out["a0"] = nlohmann::ordered_json::parse(algebra_to_json(a0));
    auto& letters = out["letters"] = nlohmann::ordered_json::array();
    for (const auto& letter : word.letters) {
        FormalSum l;
        l.add(encode_sequence(letter), 1);
        letters.push_back(nlohmann::ordered_json::parse(algebra_to_json(l)));
    }
    return out.dump();
}

BarWord bar_word_from_json(const std::string& text) {
    const auto in = nlohmann::json::parse(text);
    auto one_sequence = [](const FormalSum& elem) {
        if (elem.terms.size() != 1 || elem.terms.begin()->second != 1) {
            throw std::invalid_argument("bar word parts must be single unit-coefficient terms");
        }
        return decode_sequence(elem.terms.begin()->first);
    };
    BarWord word;
    word.a0 = one_sequence(algebra_from_json(in.at("a0").dump()));
    for (const auto& jl : in.at("letters")) {
        word.letters.push_back(one_sequence(algebra_from_json(jl.dump())));
    }
    return word;
}

}  // namespace gh
