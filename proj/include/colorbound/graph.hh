/* vim: set sw=4 sts=4 et : */

#ifndef COLORBOUND_GUARD_GRAPH_HH
#define COLORBOUND_GUARD_GRAPH_HH 1

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace colorbound
{
    class Partition;

    /// Largest vertex count the bitmask coloring search can represent at all.
    inline constexpr int max_mask_vertices = 32;

    /**
     * Limits applied to any operation that searches over colorings. The
     * default cap of 16 vertices can be raised up to max_mask_vertices.
     */
    struct ColoringLimits
    {
        int max_vertices = 16;
    };

    /// Number of unordered vertex pairs on v vertices, C(v, 2).
    auto pair_count(int v) -> std::uint64_t;

    /// Lexicographic index of the pair (i, j), i < j, among all pairs on v vertices.
    auto pair_index(int v, int i, int j) -> std::uint64_t;

    /// Inverse of pair_index.
    auto pair_at(int v, std::uint64_t index) -> std::pair<int, int>;

    /**
     * A labeled simple graph: a vertex count plus one bit per unordered pair,
     * bit k standing for the k-th pair (i, j), i < j, in lexicographic order.
     * Values are immutable once built.
     */
    class Graph
    {
        private:
            int _vertex_count;
            std::vector<std::uint64_t> _words;

            Graph(int vertex_count, std::vector<std::uint64_t> && words);

        public:
            /// Edgeless graph on vertex_count vertices.
            explicit Graph(int vertex_count);

            Graph(int vertex_count, std::span<const std::pair<int, int>> edges);
            Graph(int vertex_count, std::initializer_list<std::pair<int, int>> edges);

            /// Graph whose edge bit vector is the low pair_count(vertex_count) bits of bits.
            static auto from_bits(int vertex_count, std::uint64_t bits) -> Graph;

            /// Graph from a full edge bit vector stored as little-endian 64-bit words.
            static auto from_words(int vertex_count, std::vector<std::uint64_t> words) -> Graph;

            static auto complete(int vertex_count) -> Graph;
            static auto cycle(int vertex_count) -> Graph;

            auto vertex_count() const -> int { return _vertex_count; }
            auto bit_length() const -> std::uint64_t { return pair_count(_vertex_count); }
            auto words() const -> std::span<const std::uint64_t> { return _words; }

            auto has_edge_bit(std::uint64_t index) const -> bool;
            auto adjacent(int i, int j) const -> bool;
            auto degree(int v) const -> int;
            auto edge_count() const -> std::uint64_t;
            auto edges() const -> std::vector<std::pair<int, int>>;

            /// Copy of this graph with the pair (i, j) present.
            auto with_edge(int i, int j) const -> Graph;

            /// Neighbourhood of each vertex as a bitmask; requires vertex_count <= max_mask_vertices.
            auto adjacency_masks() const -> std::vector<std::uint32_t>;

            auto operator== (const Graph &) const -> bool = default;
    };

    /// A color per vertex, colors numbered from 1.
    class ColorAssignment
    {
        private:
            std::vector<int> _colors;

        public:
            explicit ColorAssignment(std::vector<int> colors);

            auto colors() const -> std::span<const int> { return _colors; }
            auto color_of(int v) const -> int { return _colors.at(v); }
            auto colors_used() const -> int;

            /// No edge of g joins two equally colored vertices.
            auto is_proper_for(const Graph & g) const -> bool;

            /// Sizes of the nonempty color classes, in color order.
            auto class_sizes() const -> std::vector<int>;
    };

    /**
     * The complete multipartite graph on the classes of p: classes occupy
     * consecutive vertex ranges in canonical part order, every cross-class
     * pair is an edge, and no intra-class pair is.
     */
    auto complete_multipartite(const Partition & p) -> Graph;

    /// The coloring that gives each class of complete_multipartite(p) its own color.
    auto class_coloring(const Partition & p) -> ColorAssignment;

    auto is_k_colorable(const Graph & g, int k, ColoringLimits limits = { }) -> bool;

    /// A proper coloring using at most k colors, if one exists.
    auto find_coloring(const Graph & g, int k, ColoringLimits limits = { }) -> std::optional<ColorAssignment>;

    /// Least k for which g is k-colorable; 0 for the graph with no vertices.
    auto chromatic_number(const Graph & g, ColoringLimits limits = { }) -> int;

    /**
     * Chromatic number of the graph given directly as neighbourhood masks.
     * This is the entry point the enumeration kernels use; it performs no
     * cap check of its own beyond max_mask_vertices.
     */
    auto chromatic_number_of_masks(std::span<const std::uint32_t> adjacency) -> int;

    /// `{"v":<int>,"edges_hex":"<hex>"}`, most significant digit first, bit 0 is pair 0.
    auto to_json_string(const Graph & g) -> std::string;
    auto edges_hex(const Graph & g) -> std::string;
    auto graph_from_hex(int vertex_count, const std::string & hex) -> Graph;
    auto graph_from_json_string(const std::string & text) -> Graph;
}

#endif
