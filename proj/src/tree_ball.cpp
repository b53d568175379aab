#include "permbox/tree_ball.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "permbox/errors.hpp"

namespace permbox {

namespace {

std::uint64_t splitmix64(std::uint64_t &state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Side opposite(Side s) { return s == Side::V1 ? Side::V2 : Side::V1; }

} // namespace

std::vector<unsigned> TreeBall::neighbours(unsigned v) const {
  std::vector<unsigned> out;
  if (parent[v] >= 0)
    out.push_back(static_cast<unsigned>(parent[v]));
  for (unsigned c : children[v])
    out.push_back(c);
  return out;
}

std::vector<unsigned> TreeBall::interior_vertices(Side s) const {
  std::vector<unsigned> out;
  for (unsigned v = 0; v < size(); ++v)
    if (side[v] == s && interior(v))
      out.push_back(v);
  return out;
}

TreeBall build_ball(unsigned d1, unsigned d2, unsigned radius, Side root_side,
                    std::uint64_t vertex_cap) {
  if (d1 < 2 || d2 < 2)
    throw std::invalid_argument("degenerate degrees: need d1, d2 >= 2");

  TreeBall ball;
  ball.d1 = d1;
  ball.d2 = d2;
  ball.radius = radius;
  ball.root_side = root_side;

  ball.side.push_back(root_side);
  ball.depth.push_back(0);
  ball.parent.push_back(-1);
  ball.children.emplace_back();

  std::vector<unsigned> frontier{0};
  for (unsigned level = 0; level < radius; ++level) {
    std::vector<unsigned> next;
    for (unsigned v : frontier) {
      unsigned valency = ball.valency_of_side(ball.side[v]);
      unsigned child_count = (v == 0) ? valency : valency - 1;
      for (unsigned c = 0; c < child_count; ++c) {
        if (ball.size() + 1 > vertex_cap)
          throw CapExceeded("tree ball vertex cap exceeded");
        unsigned id = ball.size();
        ball.side.push_back(opposite(ball.side[v]));
        ball.depth.push_back(level + 1);
        ball.parent.push_back(static_cast<int>(v));
        ball.children.emplace_back();
        ball.children[v].push_back(id);
        next.push_back(id);
      }
    }
    frontier = std::move(next);
  }
  return ball;
}

namespace {

LegalColouring colour_ball(const TreeBall &ball, std::uint64_t *seed) {
  LegalColouring col;
  col.in_colour.assign(ball.size(), 0);

  // The root's in-colour, then children layer by layer. Children of v take
  // the colours of v's side-set not used by v's parent, in BFS order.
  std::uint64_t state = seed ? *seed : 0;
  unsigned root_colours = ball.colours_of_side(opposite(ball.root_side));
  col.in_colour[ball.root()] =
      seed ? static_cast<unsigned>(splitmix64(state) % root_colours) : 0;

  for (unsigned v = 0; v < ball.size(); ++v) {
    if (ball.children[v].empty())
      continue;
    unsigned palette = ball.colours_of_side(ball.side[v]);
    std::vector<unsigned> available;
    for (unsigned c = 0; c < palette; ++c)
      if (ball.parent[v] < 0 || col.in_colour[ball.parent[v]] != c)
        available.push_back(c);
    if (seed) {
      for (std::size_t i = available.size(); i > 1; --i)
        std::swap(available[i - 1],
                  available[splitmix64(state) % i]);
    }
    for (std::size_t i = 0; i < ball.children[v].size(); ++i)
      col.in_colour[ball.children[v][i]] = available[i];
  }
  if (seed)
    *seed = state;
  return col;
}

} // namespace

LegalColouring legal_colouring(const TreeBall &ball) {
  return colour_ball(ball, nullptr);
}

LegalColouring random_legal_colouring(const TreeBall &ball,
                                      std::uint64_t seed) {
  std::uint64_t state = seed;
  return colour_ball(ball, &state);
}

bool colouring_is_legal(const TreeBall &ball, const LegalColouring &col) {
  if (col.in_colour.size() != ball.size())
    return false;
  for (unsigned v = 0; v < ball.size(); ++v) {
    unsigned palette = ball.colours_of_side(opposite(ball.side[v]));
    if (col.in_colour[v] >= palette)
      return false;
  }
  // Around every interior vertex the out-arc colours (the neighbours'
  // in-colours) must biject onto the vertex's colour set; in-arc constancy
  // is intrinsic to the label representation.
  for (unsigned v = 0; v < ball.size(); ++v) {
    if (!ball.interior(v))
      continue;
    std::set<unsigned> seen;
    for (unsigned w : ball.neighbours(v))
      if (!seen.insert(col.in_colour[w]).second)
        return false;
    if (seen.size() != ball.colours_of_side(ball.side[v]))
      return false;
  }
  return true;
}

Permutation theta_map(const TreeBall &ball, const Permutation &g, unsigned v,
                      const LegalColouring &col) {
  if (!ball.interior(v) || !ball.interior(g[v]))
    throw HypothesisViolation("theta: boundary vertex supplied");
  unsigned palette = ball.colours_of_side(ball.side[v]);
  std::vector<unsigned> images(palette, palette);
  for (unsigned w : ball.neighbours(v)) {
    unsigned from = col.in_colour[w];
    unsigned to = col.in_colour[g[w]];
    images[from] = to;
  }
  return Permutation(images);
}

bool is_ball_automorphism(const TreeBall &ball, const Permutation &g) {
  if (g.degree() != ball.size())
    return false;
  for (unsigned v = 0; v < ball.size(); ++v) {
    if (ball.side[g[v]] != ball.side[v] || ball.depth[g[v]] != ball.depth[v])
      return false;
    if (ball.parent[v] >= 0 &&
        static_cast<int>(g[static_cast<unsigned>(ball.parent[v])]) !=
            ball.parent[g[v]])
      return false;
  }
  return true;
}

std::string tree_ball_to_json(const TreeBall &ball,
                              const LegalColouring &col) {
  nlohmann::ordered_json doc;
  doc["schema"] = "permbox.treeball/1";
  doc["d1"] = ball.d1;
  doc["d2"] = ball.d2;
  doc["radius"] = ball.radius;
  doc["root_side"] = ball.root_side == Side::V1 ? 1 : 2;
  nlohmann::ordered_json vertices = nlohmann::ordered_json::array();
  for (unsigned v = 0; v < ball.size(); ++v) {
    nlohmann::ordered_json vertex;
    vertex["id"] = v;
    vertex["side"] = ball.side[v] == Side::V1 ? 1 : 2;
    vertex["depth"] = ball.depth[v];
    vertex["parent"] = ball.parent[v];
    vertex["interior"] = ball.interior(v);
    vertices.push_back(std::move(vertex));
  }
  doc["vertices"] = std::move(vertices);
  nlohmann::ordered_json arcs = nlohmann::ordered_json::array();
  for (unsigned v = 0; v < ball.size(); ++v)
    for (unsigned c : ball.children[v]) {
      // Both arc directions, each with the colour of its terminal vertex.
      nlohmann::ordered_json down;
      down["from"] = v;
      down["to"] = c;
      down["colour"] = col.arc_colour(v, c);
      arcs.push_back(std::move(down));
      nlohmann::ordered_json up;
      up["from"] = c;
      up["to"] = v;
      up["colour"] = col.arc_colour(c, v);
      arcs.push_back(std::move(up));
    }
  doc["arcs"] = std::move(arcs);
  return doc.dump(2);
}

void tree_ball_from_json(const std::string &text, TreeBall &ball,
                         LegalColouring &col) {
  nlohmann::json doc = nlohmann::json::parse(text);
  if (doc.at("schema") != "permbox.treeball/1")
    throw std::invalid_argument("unsupported tree ball schema");
  ball = TreeBall{};
  ball.d1 = doc.at("d1").get<unsigned>();
  ball.d2 = doc.at("d2").get<unsigned>();
  ball.radius = doc.at("radius").get<unsigned>();
  ball.root_side = doc.at("root_side").get<int>() == 1 ? Side::V1 : Side::V2;
  const auto &vertices = doc.at("vertices");
  ball.side.resize(vertices.size());
  ball.depth.resize(vertices.size());
  ball.parent.resize(vertices.size());
  ball.children.assign(vertices.size(), {});
  for (const auto &vertex : vertices) {
    unsigned id = vertex.at("id").get<unsigned>();
    ball.side[id] = vertex.at("side").get<int>() == 1 ? Side::V1 : Side::V2;
    ball.depth[id] = vertex.at("depth").get<unsigned>();
    ball.parent[id] = vertex.at("parent").get<int>();
    if (ball.parent[id] >= 0)
      ball.children[static_cast<unsigned>(ball.parent[id])].push_back(id);
  }
  col.in_colour.assign(vertices.size(), 0);
  for (const auto &arc : doc.at("arcs"))
    col.in_colour[arc.at("to").get<unsigned>()] =
        arc.at("colour").get<unsigned>();
}

} // namespace permbox
