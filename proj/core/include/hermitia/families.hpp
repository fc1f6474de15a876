#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hermitia/graph.hpp"

namespace hermitia {

// Generators. Vertex order is block by block in the order the parameters are
// listed; for the K families the apex v is vertex 0, followed by the q-side
// blocks and then the n-side blocks.

/// Complete tripartite on parts A, B, C with every A->B, B->C, C->A edge an
/// arc in that direction.
QuartGainGraph gen_c3t(std::size_t t1, std::size_t t2, std::size_t t3);
QuartGainGraph gen_complete_multipartite(const std::vector<std::size_t>& sizes);
/// Star on n vertices, center 0.
QuartGainGraph gen_star(std::size_t n);
/// Cycle 0-1-...-(n-1)-0; edge j joins j and j+1 (mod n) and is the arc
/// j -> j+1 when j is listed in `arcs`.
QuartGainGraph gen_cycle(std::size_t n, const std::vector<std::size_t>& arcs = {});
QuartGainGraph gen_K_plain(const std::vector<std::size_t>& q, const std::vector<std::size_t>& n, std::size_t p);
QuartGainGraph gen_K_gain(const std::vector<std::size_t>& q, const std::vector<std::size_t>& n, std::size_t a,
                          std::size_t b, std::size_t c, std::size_t d);

// Textual specs:
//   c3t:T1,T2,T3
//   cm:N1,N2,...
//   star:N
//   cycle:N  or  cycle:N;arcs=J1,J2,...
//   K:q=Q1,...;n=N1,...;p=P              (q=0 for an empty q-side)
//   K:q=Q1,...;n=N1,...;a=A,b=B,c=C,d=D
//   coal(SPEC@V|SPEC@V)

struct FamilySpec;

namespace family {

struct C3t {
  std::size_t t1 = 1, t2 = 1, t3 = 1;
  friend bool operator==(const C3t&, const C3t&) = default;
};
struct Multipartite {
  std::vector<std::size_t> sizes;
  friend bool operator==(const Multipartite&, const Multipartite&) = default;
};
struct Star {
  std::size_t n = 2;
  friend bool operator==(const Star&, const Star&) = default;
};
struct Cycle {
  std::size_t n = 3;
  std::vector<std::size_t> arcs;
  friend bool operator==(const Cycle&, const Cycle&) = default;
};
struct KPlain {
  std::vector<std::size_t> q, n;
  std::size_t p = 1;
  friend bool operator==(const KPlain&, const KPlain&) = default;
};
struct KGain {
  std::vector<std::size_t> q, n;
  std::size_t a = 0, b = 0, c = 0, d = 0;
  friend bool operator==(const KGain&, const KGain&) = default;
};
struct Coalescence {
  std::shared_ptr<const FamilySpec> left;
  Vertex v1 = 0;
  std::shared_ptr<const FamilySpec> right;
  Vertex v2 = 0;
  friend bool operator==(const Coalescence& x, const Coalescence& y);
};

}  // namespace family

struct FamilySpec {
  std::variant<family::C3t, family::Multipartite, family::Star, family::Cycle, family::KPlain, family::KGain,
               family::Coalescence>
      value;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Throws ParseError (line 1) on malformed text.
FamilySpec parse_family(std::string_view text);
std::string print_family(const FamilySpec& spec);

QuartGainGraph realize(const FamilySpec& spec);

}  // namespace hermitia
