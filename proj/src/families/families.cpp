#include "connsets/families.hpp"

#include <charconv>

#include "connsets/canonical.hpp"
#include "connsets/errors.hpp"

namespace connsets {

using namespace family;

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require(bool ok, const std::string& spec, const std::string& rule) {
  if (!ok) throw ParameterError(spec + ": requires " + rule);
}

// Edge sink with a running vertex counter.
struct Builder {
  int next = 0;
  std::vector<Edge> edges;
  Vertex fresh() { return next++; }
  void edge(Vertex u, Vertex v) { edges.emplace_back(u, v); }
  // Path from `from` to `to` through `interior` new vertices.
  void path(Vertex from, Vertex to, int interior) {
    Vertex prev = from;
    for (int i = 0; i < interior; ++i) {
      Vertex w = fresh();
      edge(prev, w);
      prev = w;
    }
    edge(prev, to);
  }
  // Cycle of `len` vertices through existing vertex `at`.
  void cycle(Vertex at, int len) {
    Vertex prev = at;
    for (int i = 0; i < len - 1; ++i) {
      Vertex w = fresh();
      edge(prev, w);
      prev = w;
    }
    edge(prev, at);
  }
};

Builder theta_edges(int a, int b, int c) {
  Builder bld;
  Vertex h0 = bld.fresh(), h1 = bld.fresh();
  for (int len : {a, b, c}) bld.path(h0, h1, len - 2);
  return bld;
}

Builder dumbbell_edges(int p, int q, int r) {
  Builder bld;
  Vertex x = bld.fresh();
  Vertex y = r >= 2 ? bld.fresh() : x;
  bld.cycle(x, p);
  bld.cycle(y, q);
  if (r >= 2) bld.path(x, y, r - 2);
  return bld;
}

int parse_int(std::string_view tok, const std::string& text, const std::string& name) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError("family '" + text + "': parameter " + name + " is not an integer ('" + std::string(tok) + "')");
  return value;
}

std::vector<int> parse_params(std::string_view body, const std::string& text, const std::vector<std::string>& names) {
  std::vector<std::string_view> toks;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = body.find(',', start);
    toks.push_back(body.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (toks.size() != names.size()) {
    std::string list;
    for (const auto& n : names) list += (list.empty() ? "" : ",") + n;
    throw ParseError("family '" + text + "': expected " + std::to_string(names.size()) + " parameter(s) (" + list +
                     "), got " + std::to_string(toks.size()));
  }
  std::vector<int> out;
  for (std::size_t i = 0; i < toks.size(); ++i) out.push_back(parse_int(toks[i], text, names[i]));
  return out;
}

}  // namespace

std::string name_of(Named which) {
  switch (which) {
    case Named::E8: return "E8";
    case Named::E7: return "E7";
    case Named::E61: return "E6,1";
    case Named::E62: return "E6,2";
    case Named::E51: return "E5,1";
    case Named::E52: return "E5,2";
    case Named::A4: return "A4";
  }
  return "?";
}

Theta theta_of(Named which) {
  switch (which) {
    case Named::E8: return {4, 4, 4};
    case Named::E7: return {3, 4, 4};
    case Named::E61: return {2, 4, 4};
    case Named::E62: return {3, 3, 4};
    case Named::E51: return {2, 3, 4};
    case Named::E52: return {3, 3, 3};
    case Named::A4: return {2, 3, 3};
  }
  return {2, 3, 3};
}

std::string to_string(const FamilySpec& spec) {
  auto s = [](int v) { return std::to_string(v); };
  return std::visit(overloaded{
                        [&](const Path& f) { return "P:" + s(f.n); },
                        [&](const Cycle& f) { return "C:" + s(f.n); },
                        [&](const Star& f) { return "S:" + s(f.n); },
                        [&](const Tadpole& f) { return "D:" + s(f.m); },
                        [&](const Dumbbell& f) { return "dumbbell:" + s(f.p) + "," + s(f.q) + "," + s(f.r); },
                        [&](const TypeII& f) { return "typeII:" + s(f.p) + "," + s(f.q); },
                        [&](const Theta& f) { return "theta:" + s(f.a) + "," + s(f.b) + "," + s(f.c); },
                        [&](const An& f) { return "A:" + s(f.n); },
                        [&](const Ln& f) { return "L:" + s(f.n); },
                        [&](const Bn& f) { return "B:" + s(f.n); },
                        [&](const Rn& f) { return "R:" + s(f.n); },
                        [&](const Qn& f) { return "Q:" + s(f.n); },
                        [&](const E& f) {
                          return f.which == Named::A4 ? std::string("A4") : "E:" + name_of(f.which).substr(1);
                        },
                    },
                    spec);
}

void validate(const FamilySpec& spec) {
  const std::string t = to_string(spec);
  auto fits = [&](int n) { require(n <= kMaxVertices, t, "at most 64 vertices (got " + std::to_string(n) + ")"); };
  std::visit(overloaded{
                 [&](const Path& f) { require(f.n >= 1, t, "n >= 1"); },
                 [&](const Cycle& f) { require(f.n >= 3, t, "n >= 3"); },
                 [&](const Star& f) { require(f.n >= 1, t, "n >= 1"); },
                 [&](const Tadpole& f) { require(f.m >= 4, t, "m >= 4"); },
                 [&](const Dumbbell& f) {
                   require(f.p >= 3, t, "p >= 3");
                   require(f.q >= 3, t, "q >= 3");
                   require(f.r >= 1, t, "r >= 1");
                 },
                 [&](const TypeII& f) {
                   require(f.p >= 3, t, "p >= 3");
                   require(f.q >= 3, t, "q >= 3");
                 },
                 [&](const Theta& f) {
                   require(f.a >= 2, t, "a >= 2");
                   require(f.a <= f.b, t, "a <= b");
                   require(f.b <= f.c, t, "b <= c");
                   require(f.b >= 3, t, "b >= 3");
                 },
                 [&](const An& f) { require(f.n >= 4, t, "n >= 4"); },
                 [&](const Ln& f) { require(f.n >= 5, t, "n >= 5"); },
                 [&](const Bn& f) { require(f.n >= 5, t, "n >= 5"); },
                 [&](const Rn& f) { require(f.n >= 6, t, "n >= 6"); },
                 [&](const Qn& f) { require(f.n >= 3, t, "n >= 3"); },
                 [&](const E&) {},
             },
             spec);
  fits(family_order(spec));
}

int family_order(const FamilySpec& spec) {
  return std::visit(overloaded{
                        [](const Path& f) { return f.n; },
                        [](const Cycle& f) { return f.n; },
                        [](const Star& f) { return f.n; },
                        [](const Tadpole& f) { return f.m; },
                        [](const Dumbbell& f) { return f.p + f.q + f.r - 2; },
                        [](const TypeII& f) { return f.p + f.q - 1; },
                        [](const Theta& f) { return f.a + f.b + f.c - 4; },
                        [](const An& f) { return f.n; },
                        [](const Ln& f) { return f.n; },
                        [](const Bn& f) { return f.n; },
                        [](const Rn& f) { return f.n; },
                        [](const Qn& f) { return f.n; },
                        [](const E& f) {
                          Theta th = theta_of(f.which);
                          return th.a + th.b + th.c - 4;
                        },
                    },
                    spec);
}

FamilySpec parse_family(std::string_view input) {
  const std::string text(input);
  if (text == "A4") return E{Named::A4};
  if (text.size() >= 2 && text[0] == 'E' && text.find(':') == std::string::npos) {
    const std::string rest = text.substr(1);
    if (rest == "8") return E{Named::E8};
    if (rest == "7") return E{Named::E7};
    if (rest == "61") return E{Named::E61};
    if (rest == "62") return E{Named::E62};
    if (rest == "51") return E{Named::E51};
    if (rest == "52") return E{Named::E52};
    throw ParseError("family '" + text + "': unknown E graph (expected E8, E7, E61, E62, E51, E52)");
  }
  const std::size_t colon = text.find(':');
  if (colon == std::string::npos) throw ParseError("family '" + text + "': expected <family>:<parameters>");
  const std::string key = text.substr(0, colon);
  const std::string_view body = std::string_view(text).substr(colon + 1);

  auto one = [&](const char* name) { return parse_params(body, text, {name})[0]; };
  FamilySpec spec;
  if (key == "P" || key == "path") {
    spec = Path{one("n")};
  } else if (key == "C" || key == "cycle") {
    spec = Cycle{one("n")};
  } else if (key == "S" || key == "star") {
    spec = Star{one("n")};
  } else if (key == "D" || key == "tadpole") {
    spec = Tadpole{one("m")};
  } else if (key == "dumbbell" || key == "G") {
    auto v = parse_params(body, text, {"p", "q", "r"});
    spec = Dumbbell{v[0], v[1], v[2]};
  } else if (key == "typeII" || key == "II") {
    auto v = parse_params(body, text, {"p", "q"});
    spec = TypeII{v[0], v[1]};
  } else if (key == "theta") {
    auto v = parse_params(body, text, {"a", "b", "c"});
    spec = Theta{v[0], v[1], v[2]};
  } else if (key == "A") {
    spec = An{one("n")};
  } else if (key == "L") {
    spec = Ln{one("n")};
  } else if (key == "B") {
    spec = Bn{one("n")};
  } else if (key == "R") {
    spec = Rn{one("n")};
  } else if (key == "Q") {
    spec = Qn{one("n")};
  } else if (key == "E") {
    const std::string b(body);
    if (b == "8") spec = E{Named::E8};
    else if (b == "7") spec = E{Named::E7};
    else if (b == "6,1") spec = E{Named::E61};
    else if (b == "6,2") spec = E{Named::E62};
    else if (b == "5,1") spec = E{Named::E51};
    else if (b == "5,2") spec = E{Named::E52};
    else throw ParseError("family '" + text + "': unknown E graph '" + b + "'");
  } else {
    throw ParseError("family '" + text + "': unknown family '" + key + "'");
  }
  validate(spec);
  return spec;
}

Graph build(const FamilySpec& spec) {
  validate(spec);
  const std::string label = to_string(spec);
  auto finish = [&](const Builder& b) { return Graph(b.next, b.edges, label); };
  return std::visit(
      overloaded{
          [&](const Path& f) {
            Builder b;
            Vertex prev = b.fresh();
            for (int i = 1; i < f.n; ++i) {
              Vertex w = b.fresh();
              b.edge(prev, w);
              prev = w;
            }
            return finish(b);
          },
          [&](const Cycle& f) {
            Builder b;
            b.cycle(b.fresh(), f.n);
            return finish(b);
          },
          [&](const Star& f) {
            Builder b;
            Vertex c = b.fresh();
            for (int i = 1; i < f.n; ++i) b.edge(c, b.fresh());
            return finish(b);
          },
          [&](const Tadpole& f) {
            Builder b;
            Vertex h = b.fresh();
            b.cycle(h, 3);
            Vertex prev = h;
            for (int i = 0; i < f.m - 3; ++i) {
              Vertex w = b.fresh();
              b.edge(prev, w);
              prev = w;
            }
            return finish(b);
          },
          [&](const Dumbbell& f) { return finish(dumbbell_edges(f.p, f.q, f.r)); },
          [&](const TypeII& f) { return finish(dumbbell_edges(f.p, f.q, 1)); },
          [&](const Theta& f) { return finish(theta_edges(f.a, f.b, f.c)); },
          [&](const An& f) {
            Builder b = theta_edges(2, 3, 3);
            Vertex prev = 2;  // a degree-2 vertex of A4
            for (int i = 4; i < f.n; ++i) {
              Vertex w = b.fresh();
              b.edge(prev, w);
              prev = w;
            }
            return finish(b);
          },
          [&](const Ln& f) { return finish(dumbbell_edges(3, 3, f.n - 4)); },
          [&](const Bn& f) {
            Builder b = theta_edges(2, 3, 3);
            for (int i = 4; i < f.n; ++i) b.edge(0, b.fresh());
            return finish(b);
          },
          [&](const Rn& f) {
            Builder b = dumbbell_edges(3, 3, 1);
            for (int i = 5; i < f.n; ++i) b.edge(0, b.fresh());
            return finish(b);
          },
          [&](const Qn& f) {
            Builder b;
            Vertex c = b.fresh();
            for (int i = 1; i < f.n; ++i) b.edge(c, b.fresh());
            b.edge(1, 2);
            return finish(b);
          },
          [&](const E& f) {
            Theta th = theta_of(f.which);
            return finish(theta_edges(th.a, th.b, th.c));
          },
      },
      spec);
}

std::optional<Count> closed_form(const FamilySpec& spec) {
  validate(spec);
  return std::visit(overloaded{
                        [](const Path& f) -> std::optional<Count> {
                          Count n = f.n;
                          return n * (n + 1) / 2;
                        },
                        [](const Cycle& f) -> std::optional<Count> {
                          Count n = f.n;
                          return n * n - n + 1;
                        },
                        [](const Star& f) -> std::optional<Count> {
                          return checked_add(pow2(f.n - 1), static_cast<Count>(f.n - 1));
                        },
                        [](const Tadpole& f) -> std::optional<Count> {
                          Count m = f.m;
                          return (m - 1) * (m + 4) / 2;
                        },
                        [](const Dumbbell&) -> std::optional<Count> { return std::nullopt; },
                        [](const TypeII&) -> std::optional<Count> { return std::nullopt; },
                        [](const Theta&) -> std::optional<Count> { return std::nullopt; },
                        [](const An& f) -> std::optional<Count> {
                          Count n = f.n;
                          return (n * n + 7 * n - 16) / 2;
                        },
                        [](const Ln& f) -> std::optional<Count> {
                          Count n = f.n;
                          return (n + 6) * (n - 1) / 2;
                        },
                        [](const Bn& f) -> std::optional<Count> {
                          return checked_add(pow2(f.n - 1), static_cast<Count>(f.n + 2));
                        },
                        [](const Rn& f) -> std::optional<Count> {
                          return checked_add(pow2(f.n - 1), static_cast<Count>(f.n + 1));
                        },
                        [](const Qn&) -> std::optional<Count> { return std::nullopt; },
                        [](const E& f) -> std::optional<Count> {
                          for (const auto& row : e_graph_reference())
                            if (row.which == f.which) return row.count;
                          return std::nullopt;
                        },
                    },
                    spec);
}

const std::vector<EGraphRow>& e_graph_reference() {
  static const std::vector<EGraphRow> rows = {
      {Named::A4, "A4", 14, 8},    {Named::E52, "E5,2", 26, 15}, {Named::E51, "E5,1", 24, 14},
      {Named::E62, "E6,2", 42, 25}, {Named::E61, "E6,1", 40, 25}, {Named::E7, "E7", 66, 41},
      {Named::E8, "E8", 100, 64},
  };
  return rows;
}

std::vector<FamilySpec> specs_of_order(int n) {
  std::vector<FamilySpec> out;
  if (n < 1 || n > kMaxVertices) return out;
  if (n >= 5) out.push_back(Ln{n});
  if (n >= 4) out.push_back(An{n});
  if (n >= 5) out.push_back(Bn{n});
  if (n >= 6) out.push_back(Rn{n});
  if (n >= 3) out.push_back(Qn{n});
  for (const auto& row : e_graph_reference())
    if (family_order(E{row.which}) == n) out.push_back(E{row.which});
  out.push_back(Path{n});
  if (n >= 3) out.push_back(Cycle{n});
  if (n >= 4) out.push_back(Star{n});
  if (n >= 4) out.push_back(Tadpole{n});
  for (int p = 3; p <= n; ++p)
    for (int q = p; p + q - 1 <= n; ++q)
      if (p + q - 1 == n) out.push_back(TypeII{p, q});
  for (int p = 3; p <= n; ++p)
    for (int q = p; p + q <= n; ++q) {
      int r = n + 2 - p - q;
      if (r >= 2) out.push_back(Dumbbell{p, q, r});
    }
  for (int a = 2; a <= n; ++a)
    for (int b = std::max(a, 3); a + 2 * b - 4 <= n; ++b) {
      int c = n + 4 - a - b;
      if (c >= b) out.push_back(Theta{a, b, c});
    }
  return out;
}

std::optional<std::string> identify_family(const Graph& g) {
  std::optional<Certificate> cert;
  for (const auto& spec : specs_of_order(g.order())) {
    Graph h = build(spec);
    if (h.size() != g.size()) continue;
    if (!cert) cert = canonical_certificate(g);
    if (canonical_certificate(h) == *cert) return to_string(spec);
  }
  return std::nullopt;
}

}  // namespace connsets
