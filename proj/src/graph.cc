/* vim: set sw=4 sts=4 et : */

#include <colorbound/graph.hh>
#include <colorbound/partitions.hh>
#include <colorbound/errors.hh>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>

using std::pair;
using std::span;
using std::string;
using std::uint32_t;
using std::uint64_t;
using std::vector;

namespace colorbound
{
    namespace
    {
        auto words_for(uint64_t bits) -> std::size_t
        {
            return static_cast<std::size_t>((bits + 63) / 64);
        }

        auto require_vertex_count(int v) -> void
        {
            if (v < 0)
                throw PreconditionError{ "vertex count must be nonnegative, got " + std::to_string(v) };
        }

        auto require_pair(int v, int i, int j) -> void
        {
            if (i < 0 || j < 0 || i >= v || j >= v || i == j)
                throw PreconditionError{ "no pair (" + std::to_string(i) + ", " + std::to_string(j)
                    + ") on " + std::to_string(v) + " vertices" };
        }

        auto require_within_cap(int v, const ColoringLimits & limits) -> void
        {
            int cap = std::min(limits.max_vertices, max_mask_vertices);
            if (v > cap)
                throw ResourceGuardError{ "coloring is capped at " + std::to_string(cap)
                    + " vertices, graph has " + std::to_string(v) };
        }

        /**
         * Backtracking k-colorer over neighbourhood bitmasks. Vertices are
         * visited in non-increasing degree order, and a vertex may only open
         * one colour beyond those already in use.
         */
        class Colourer
        {
            private:
                int _size;
                std::array<int, max_mask_vertices> _order;
                std::array<uint32_t, max_mask_vertices> _adjacency; // indexed by position in _order, bits are positions
                std::array<uint32_t, max_mask_vertices> _classes;
                std::array<int, max_mask_vertices> _colour_at;

                auto expand(int position, int used, int k) -> bool
                {
                    if (position == _size)
                        return true;

                    int limit = std::min(used + 1, k);
                    for (int c = 0 ; c < limit ; ++c) {
                        if (0 == (_adjacency[position] & _classes[c])) {
                            _classes[c] |= (uint32_t{ 1 } << position);
                            _colour_at[position] = c;
                            if (expand(position + 1, std::max(used, c + 1), k))
                                return true;
                            _classes[c] &= ~(uint32_t{ 1 } << position);
                        }
                    }

                    return false;
                }

            public:
                explicit Colourer(span<const uint32_t> adjacency) :
                    _size(static_cast<int>(adjacency.size())),
                    _adjacency{ },
                    _classes{ },
                    _colour_at{ }
                {
                    std::iota(_order.begin(), _order.begin() + _size, 0);
                    std::stable_sort(_order.begin(), _order.begin() + _size, [&] (int a, int b) {
                            return std::popcount(adjacency[a]) > std::popcount(adjacency[b]);
                            });

                    std::array<int, max_mask_vertices> position_of;
                    for (int p = 0 ; p < _size ; ++p)
                        position_of[_order[p]] = p;

                    for (int p = 0 ; p < _size ; ++p)
                        for (uint32_t rest = adjacency[_order[p]] ; rest ; rest &= rest - 1)
                            _adjacency[p] |= uint32_t{ 1 } << position_of[std::countr_zero(rest)];
                }

                auto colourable(int k) -> bool
                {
                    if (_size == 0)
                        return true;
                    if (k <= 0)
                        return false;

                    _classes.fill(0);
                    return expand(0, 0, k);
                }

                /// Colours per original vertex, numbered from 1; valid after colourable() returned true.
                auto assignment() const -> vector<int>
                {
                    vector<int> result(_size);
                    for (int p = 0 ; p < _size ; ++p)
                        result[_order[p]] = _colour_at[p] + 1;
                    return result;
                }

                auto chromatic_number() -> int
                {
                    if (_size == 0)
                        return 0;

                    bool any_edge = std::any_of(_adjacency.begin(), _adjacency.begin() + _size, [] (uint32_t a) { return a != 0; });
                    for (int k = any_edge ? 2 : 1 ; k < _size ; ++k)
                        if (colourable(k))
                            return k;
                    return _size;
                }
        };
    }

    auto pair_count(int v) -> uint64_t
    {
        if (v < 2)
            return 0;
        return uint64_t(v) * uint64_t(v - 1) / 2;
    }

    auto pair_index(int v, int i, int j) -> uint64_t
    {
        if (i > j)
            std::swap(i, j);
        require_pair(v, i, j);
        return uint64_t(i) * uint64_t(2 * v - i - 1) / 2 + uint64_t(j - i - 1);
    }

    auto pair_at(int v, uint64_t index) -> pair<int, int>
    {
        if (index >= pair_count(v))
            throw PreconditionError{ "pair index " + std::to_string(index) + " out of range for "
                + std::to_string(v) + " vertices" };

        int i = 0;
        uint64_t row = uint64_t(v - 1);
        while (index >= row) {
            index -= row;
            ++i;
            --row;
        }
        return { i, i + 1 + int(index) };
    }

    Graph::Graph(int vertex_count, vector<uint64_t> && words) :
        _vertex_count(vertex_count),
        _words(std::move(words))
    {
    }

    Graph::Graph(int vertex_count) :
        _vertex_count(vertex_count)
    {
        require_vertex_count(vertex_count);
        _words.assign(words_for(pair_count(vertex_count)), 0);
    }

    Graph::Graph(int vertex_count, span<const pair<int, int>> edges) :
        Graph(vertex_count)
    {
        for (auto & [i, j] : edges) {
            auto k = pair_index(vertex_count, i, j);
            _words[k / 64] |= uint64_t{ 1 } << (k % 64);
        }
    }

    Graph::Graph(int vertex_count, std::initializer_list<pair<int, int>> edges) :
        Graph(vertex_count, span<const pair<int, int>>{ edges.begin(), edges.size() })
    {
    }

    auto Graph::from_bits(int vertex_count, uint64_t bits) -> Graph
    {
        require_vertex_count(vertex_count);
        auto length = pair_count(vertex_count);
        if (length < 64 && (bits >> length) != 0)
            throw PreconditionError{ "edge bits beyond the " + std::to_string(length) + " pairs of the graph" };

        vector<uint64_t> words(words_for(length), 0);
        if (! words.empty())
            words[0] = bits;
        return Graph{ vertex_count, std::move(words) };
    }

    auto Graph::from_words(int vertex_count, vector<uint64_t> words) -> Graph
    {
        require_vertex_count(vertex_count);
        auto length = pair_count(vertex_count);
        if (words.size() > words_for(length)) {
            if (std::any_of(words.begin() + words_for(length), words.end(), [] (uint64_t w) { return w != 0; }))
                throw PreconditionError{ "edge bits beyond the " + std::to_string(length) + " pairs of the graph" };
        }
        words.resize(words_for(length), 0);
        if (length % 64 != 0 && (words.back() >> (length % 64)) != 0)
            throw PreconditionError{ "edge bits beyond the " + std::to_string(length) + " pairs of the graph" };
        return Graph{ vertex_count, std::move(words) };
    }

    auto Graph::complete(int vertex_count) -> Graph
    {
        Graph result{ vertex_count };
        auto length = pair_count(vertex_count);
        for (uint64_t k = 0 ; k < length ; ++k)
            result._words[k / 64] |= uint64_t{ 1 } << (k % 64);
        return result;
    }

    auto Graph::cycle(int vertex_count) -> Graph
    {
        if (vertex_count < 3)
            throw PreconditionError{ "a cycle needs at least 3 vertices" };
        vector<pair<int, int>> edges;
        for (int i = 0 ; i < vertex_count ; ++i)
            edges.emplace_back(i, (i + 1) % vertex_count);
        return Graph{ vertex_count, edges };
    }

    auto Graph::has_edge_bit(uint64_t index) const -> bool
    {
        return (_words.at(index / 64) >> (index % 64)) & 1;
    }

    auto Graph::adjacent(int i, int j) const -> bool
    {
        return has_edge_bit(pair_index(_vertex_count, i, j));
    }

    auto Graph::degree(int v) const -> int
    {
        int result = 0;
        for (int u = 0 ; u < _vertex_count ; ++u)
            if (u != v && adjacent(u, v))
                ++result;
        return result;
    }

    auto Graph::edge_count() const -> uint64_t
    {
        uint64_t result = 0;
        for (auto w : _words)
            result += std::popcount(w);
        return result;
    }

    auto Graph::edges() const -> vector<pair<int, int>>
    {
        vector<pair<int, int>> result;
        for (int i = 0 ; i < _vertex_count ; ++i)
            for (int j = i + 1 ; j < _vertex_count ; ++j)
                if (adjacent(i, j))
                    result.emplace_back(i, j);
        return result;
    }

    auto Graph::with_edge(int i, int j) const -> Graph
    {
        auto k = pair_index(_vertex_count, i, j);
        Graph result = *this;
        result._words[k / 64] |= uint64_t{ 1 } << (k % 64);
        return result;
    }

    auto Graph::adjacency_masks() const -> vector<uint32_t>
    {
        if (_vertex_count > max_mask_vertices)
            throw ResourceGuardError{ "adjacency masks need at most " + std::to_string(max_mask_vertices) + " vertices" };

        vector<uint32_t> result(_vertex_count, 0);
        uint64_t k = 0;
        for (int i = 0 ; i < _vertex_count ; ++i)
            for (int j = i + 1 ; j < _vertex_count ; ++j, ++k)
                if (has_edge_bit(k)) {
                    result[i] |= uint32_t{ 1 } << j;
                    result[j] |= uint32_t{ 1 } << i;
                }
        return result;
    }

    ColorAssignment::ColorAssignment(vector<int> colors) :
        _colors(std::move(colors))
    {
        for (auto c : _colors)
            if (c < 1)
                throw PreconditionError{ "colors are numbered from 1, got " + std::to_string(c) };
    }

    auto ColorAssignment::colors_used() const -> int
    {
        vector<int> sorted{ _colors };
        std::sort(sorted.begin(), sorted.end());
        return static_cast<int>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
    }

    auto ColorAssignment::is_proper_for(const Graph & g) const -> bool
    {
        if (static_cast<int>(_colors.size()) != g.vertex_count())
            return false;
        for (auto & [i, j] : g.edges())
            if (_colors[i] == _colors[j])
                return false;
        return true;
    }

    auto ColorAssignment::class_sizes() const -> vector<int>
    {
        int highest = _colors.empty() ? 0 : *std::max_element(_colors.begin(), _colors.end());
        vector<int> sizes(highest, 0);
        for (auto c : _colors)
            ++sizes[c - 1];
        std::erase(sizes, 0);
        return sizes;
    }

    auto complete_multipartite(const Partition & p) -> Graph
    {
        auto colouring = class_coloring(p);
        vector<pair<int, int>> edges;
        for (int i = 0 ; i < p.total() ; ++i)
            for (int j = i + 1 ; j < p.total() ; ++j)
                if (colouring.color_of(i) != colouring.color_of(j))
                    edges.emplace_back(i, j);
        return Graph{ p.total(), edges };
    }

    auto class_coloring(const Partition & p) -> ColorAssignment
    {
        vector<int> colours;
        colours.reserve(p.total());
        int colour = 0;
        for (auto x : p.parts()) {
            ++colour;
            colours.insert(colours.end(), x, colour);
        }
        return ColorAssignment{ std::move(colours) };
    }

    auto is_k_colorable(const Graph & g, int k, ColoringLimits limits) -> bool
    {
        if (k < 0)
            throw PreconditionError{ "number of colors must be nonnegative" };
        require_within_cap(g.vertex_count(), limits);
        auto masks = g.adjacency_masks();
        return Colourer{ masks }.colourable(k);
    }

    auto find_coloring(const Graph & g, int k, ColoringLimits limits) -> std::optional<ColorAssignment>
    {
        if (k < 0)
            throw PreconditionError{ "number of colors must be nonnegative" };
        require_within_cap(g.vertex_count(), limits);
        auto masks = g.adjacency_masks();
        Colourer colourer{ masks };
        if (! colourer.colourable(k))
            return std::nullopt;
        return ColorAssignment{ colourer.assignment() };
    }

    auto chromatic_number(const Graph & g, ColoringLimits limits) -> int
    {
        require_within_cap(g.vertex_count(), limits);
        auto masks = g.adjacency_masks();
        return Colourer{ masks }.chromatic_number();
    }

    auto chromatic_number_of_masks(span<const uint32_t> adjacency) -> int
    {
        if (adjacency.size() > std::size_t(max_mask_vertices))
            throw ResourceGuardError{ "adjacency masks need at most " + std::to_string(max_mask_vertices) + " vertices" };
        return Colourer{ adjacency }.chromatic_number();
    }

    auto edges_hex(const Graph & g) -> string
    {
        static constexpr char digits[] = "0123456789abcdef";
        auto length = g.bit_length();
        auto width = std::max<uint64_t>(1, (length + 3) / 4);
        string result;
        result.reserve(width);
        for (uint64_t d = width ; d-- > 0 ; ) {
            unsigned nibble = 0;
            for (unsigned b = 0 ; b < 4 ; ++b) {
                auto k = d * 4 + b;
                if (k < length && g.has_edge_bit(k))
                    nibble |= 1u << b;
            }
            result.push_back(digits[nibble]);
        }
        return result;
    }

    auto graph_from_hex(int vertex_count, const string & hex) -> Graph
    {
        require_vertex_count(vertex_count);
        auto length = pair_count(vertex_count);
        vector<uint64_t> words(words_for(length) + 1, 0);
        uint64_t bit = 0;
        for (auto c = hex.rbegin() ; c != hex.rend() ; ++c, bit += 4) {
            unsigned nibble;
            if (*c >= '0' && *c <= '9')
                nibble = unsigned(*c - '0');
            else if (*c >= 'a' && *c <= 'f')
                nibble = unsigned(*c - 'a' + 10);
            else if (*c >= 'A' && *c <= 'F')
                nibble = unsigned(*c - 'A' + 10);
            else
                throw PreconditionError{ "not a hex digit: '" + string(1, *c) + "'" };

            for (unsigned b = 0 ; b < 4 ; ++b)
                if ((nibble >> b) & 1) {
                    auto k = bit + b;
                    if (k >= length)
                        throw PreconditionError{ "edges_hex sets bit " + std::to_string(k) + " but the graph has only "
                            + std::to_string(length) + " pairs" };
                    words[k / 64] |= uint64_t{ 1 } << (k % 64);
                }
        }
        return Graph::from_words(vertex_count, std::move(words));
    }

    auto to_json_string(const Graph & g) -> string
    {
        nlohmann::ordered_json j;
        j["v"] = g.vertex_count();
        j["edges_hex"] = edges_hex(g);
        return j.dump();
    }

    auto graph_from_json_string(const string & text) -> Graph
    {
        try {
            auto j = nlohmann::json::parse(text);
            return graph_from_hex(j.at("v").get<int>(), j.at("edges_hex").get<string>());
        }
        catch (const nlohmann::json::exception & e) {
            throw PreconditionError{ string{ "malformed graph JSON: " } + e.what() };
        }
    }
}
