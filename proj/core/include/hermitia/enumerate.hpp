#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "hermitia/graph.hpp"
#include "hermitia/switching.hpp"

namespace hermitia {

struct EnumFilters {
  bool connected = false;
  bool has_cut_vertex = false;
  bool no_pendant = false;
  bool has_pendant = false;
  bool mixed_only = false;
};

/// Orders min_n..n are enumerated in increasing order; min_n defaults to n.
struct EnumSpec {
  std::size_t n = 1;
  std::optional<std::size_t> min_n;
  EnumFilters filters;
  std::optional<std::size_t> limit;
  std::size_t cap = 7;
};

/// Canonical labeling key of an underlying graph: the largest upper-triangle
/// bit string over labelings that list vertices by non-increasing degree.
std::uint64_t canonical_key(const QuartGainGraph& g);

/// The same graph relabeled so that its bit string equals canonical_key.
QuartGainGraph canonical_underlying(const QuartGainGraph& g);

/// One representative per isomorphism class of simple graphs on n vertices,
/// sorted by canonical key.
std::vector<QuartGainGraph> underlying_graphs(std::size_t n);

/// Switch making g free of gain -1, with theta = 1 at the smallest vertex of
/// every component, if one exists.
std::optional<SwitchAssignment> mixed_representative(const QuartGainGraph& g);

/// Streams one graph per four-way switching class. `emit` returns false to
/// stop early. Returns the number of graphs emitted. Throws SizeLimitError
/// when n exceeds spec.cap.
std::size_t enumerate_switching_classes(const EnumSpec& spec,
                                        const std::function<bool(const QuartGainGraph&)>& emit);
std::vector<QuartGainGraph> enumerate_switching_classes(const EnumSpec& spec);

}  // namespace hermitia
