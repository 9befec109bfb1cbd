#include "psg/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "psg/face_dual.hpp"
#include "psg/grids.hpp"
#include "psg/ham_search.hpp"
#include "psg/io.hpp"
#include "psg/local_configs.hpp"
#include "psg/peeling.hpp"

namespace psg::cli {

namespace {

/// Failure while reading inputs; reported with exit status 2.
struct InputError {
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError{"cannot open " + path};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

template <typename F>
auto load(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw InputError{e.what()};
  }
}

PlaneSignedGraph load_graph(const std::string& path) {
  const std::string text = read_file(path);
  return load([&] { return parse_graph(text); });
}

std::size_t oracle_limit(const std::optional<std::size_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("PSG_ORACLE_LIMIT")) {
    try {
      std::size_t used = 0;
      const auto value = std::stoull(env, &used);
      if (used == std::string(env).size()) return value;
    } catch (const std::exception&) {
    }
    throw InputError{std::string("PSG_ORACLE_LIMIT is not a number: ") + env};
  }
  return kDefaultOracleLimit;
}

std::vector<VertexId> parse_walk(const std::string& text) {
  std::istringstream in(text);
  std::vector<VertexId> out;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    std::size_t v = 0;
    try {
      v = std::stoull(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || tok.front() == '-') throw InputError{"bad vertex '" + tok + "' in circle"};
    out.push_back(v);
  }
  return out;
}

std::string circle_line(const PlaneSignedGraph& g, const std::string& head, const Circle& c) {
  return head + " sign=" + symbol(circle_sign(g, c)) + " : " + join_vertices(c.vertices());
}

std::string edge_text(const PlaneSignedGraph& g, EdgeId e) {
  const auto [u, v] = g.endpoints(e);
  return "edge " + std::to_string(e) + " : " + std::to_string(u) + " " + std::to_string(v);
}

std::string face_list(const std::vector<FaceId>& faces) {
  std::string out;
  for (FaceId f : faces) out += " f" + std::to_string(f);
  return out;
}

void print_faces(const PlaneSignedGraph& g, std::ostream& out) {
  out << "faces=" << g.face_count() << " bounded=" << g.bounded_face_count() << " outer=f" << g.outer_face()
      << '\n';
  for (FaceId f : g.faces()) {
    out << "face f" << f << (f == g.outer_face() ? " outer" : "") << " len=" << g.walk(f).length()
        << " sign=" << symbol(face_sign(g, f)) << " : " << join_vertices(g.face_vertices(f)) << '\n';
  }
}

void print_dual(const FaceGraph& dual, std::ostream& out) {
  out << "nodes=" << dual.node_count() << " edges=" << dual.edge_count()
      << " tree=" << (dual.is_tree() ? "yes" : "no") << '\n';
  for (FaceId f : dual.nodes())
    out << "node f" << f << " phi=" << dual.label(f).phi << " deg=" << dual.label(f).degree << '\n';
  for (const auto& [a, b] : dual.edges()) out << "edge f" << a << " f" << b << '\n';
}

void print_sequence(const PlaneSignedGraph& g, const CoHamSequence& seq, std::ostream& out) {
  out << "steps=" << seq.edges.size() << '\n';
  for (std::size_t t = 0; t < seq.edges.size(); ++t)
    out << "step " << t + 1 << ' ' << edge_text(g, seq.edges[t]) << " face f" << seq.faces[t] << '\n';
  out << "hamiltonian_set :" << face_list(seq.final_bounded) << '\n';
}

OrderPolicy policy_from(const std::string& name) {
  if (name == "first") return OrderPolicy::FirstFound;
  if (name == "max-degree") return OrderPolicy::MaxDegree;
  return OrderPolicy::MinPhi;
}

GridSpec grid_spec(int m, int n, const std::string& signs) {
  GridSpec spec{m, n, {}};
  if (signs.empty() || signs == "all-plus") return spec;
  if (signs == "all-minus") {
    spec.signing = {};
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j < n; ++j) spec.signing[{EdgeLabel::Kind::Horizontal, i, j}] = Sign::Minus;
    for (int i = 1; i < m; ++i)
      for (int j = 1; j <= n; ++j) spec.signing[{EdgeLabel::Kind::Vertical, i, j}] = Sign::Minus;
    return spec;
  }
  const std::string text = read_file(signs);
  spec.signing = load([&] { return parse_signing(text); });
  return spec;
}

void all_minus_diagonals(GridSpec& spec) {
  for (int i = 1; i < spec.m; ++i)
    for (int j = 1; j < spec.n; ++j) spec.signing[{EdgeLabel::Kind::Diagonal, i, j}] = Sign::Minus;
}

EdgeLabel parse_label(const std::string& text) {
  std::istringstream in(text);
  std::string kind;
  int i = 0;
  int j = 0;
  std::string rest;
  if (!(in >> kind >> i >> j) || (in >> rest) || (kind != "h" && kind != "v" && kind != "d"))
    throw InputError{"bad edge label '" + text + "' (expected 'h i j', 'v i j' or 'd i j')"};
  const auto k = kind == "h" ? EdgeLabel::Kind::Horizontal
                 : kind == "v" ? EdgeLabel::Kind::Vertical
                               : EdgeLabel::Kind::Diagonal;
  return {k, i, j};
}

std::map<VertexId, std::string> grid_names(const GridGraph& grid) {
  std::map<VertexId, std::string> names;
  for (VertexId v = 0; v < grid.graph().vertex_count(); ++v) {
    const auto [i, j] = grid.coords(v);
    names[v] = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  }
  return names;
}

void print_pair(const PlaneSignedGraph& g, const std::optional<CertifiedPair>& pair, std::ostream& out) {
  if (!pair) {
    out << "certified=no sign(C1)=sign(C2)\n";
    return;
  }
  out << "certified=yes\n";
  out << circle_line(g, "c1", pair->c1) << '\n';
  out << circle_line(g, "c2", pair->c2) << '\n';
  out << circle_line(g, "first", pair->first) << '\n';
  out << circle_line(g, "second", pair->second) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Plane signed graphs: faces, duals, Hamiltonian circles and their signs", "psg"};
  app.require_subcommand(1);

  std::string file;
  std::string second_file;
  std::optional<std::size_t> limit;
  bool flag_dot = false;
  bool flag_dual = false;
  bool flag_coham = false;
  bool flag_sequences = false;
  std::string eliminate;
  std::string circle_text;
  std::string sequence_path;
  std::string signs;
  std::string boxes_path;
  std::string policy = "rising";
  std::vector<std::string> deletions;
  int m = 0;
  int n = 0;

  auto* faces = app.add_subcommand("faces", "List faces with walks and signs");
  faces->add_option("file", file, "Graph file")->required();

  auto* dual = app.add_subcommand("dual", "Weak dual with (phi, degree) labels");
  dual->add_option("file", file, "Graph file")->required();
  dual->add_flag("--dot", flag_dot, "DOT output");
  dual->add_option("--eliminate", eliminate, "Run elimination: first, max-degree or min-phi")
      ->check(CLI::IsMember({"first", "max-degree", "min-phi"}));

  auto* check = app.add_subcommand("check", "Structural checks");
  check->add_option("file", file, "Graph file")->required();

  auto* ham = app.add_subcommand("ham", "Enumerate Hamiltonian circles");
  ham->add_option("file", file, "Graph file")->required();
  ham->add_option("--limit", limit, "Stop after this many circles");

  auto* census = app.add_subcommand("census", "Count Hamiltonian circles by sign");
  census->add_option("file", file, "Graph file")->required();
  census->add_option("--limit", limit, "Enumeration cap");
  census->add_flag("--sequences", flag_sequences, "Also print opposite-sign co-Hamiltonian sequences");

  auto* peel = app.add_subcommand("peel", "One peeling step around a Hamiltonian circle");
  peel->add_option("file", file, "Graph file")->required();
  peel->add_option("--circle", circle_text, "Circle as a vertex walk")->required();

  auto* coham = app.add_subcommand("coham", "Build or validate a co-Hamiltonian sequence");
  coham->add_option("file", file, "Graph file")->required();
  auto* coham_circle = coham->add_option("--circle", circle_text, "Peel around this circle");
  auto* coham_seq = coham->add_option("--sequence", sequence_path, "Validate this edge sequence file");
  coham_circle->excludes(coham_seq);
  coham->callback([&] {
    if (circle_text.empty() && sequence_path.empty())
      throw CLI::RequiredError("coham needs --circle or --sequence");
  });

  auto* grid = app.add_subcommand("grid", "Emit an m x n grid");
  grid->add_option("m", m, "Rows")->required();
  grid->add_option("n", n, "Columns")->required();
  grid->add_option("--signs", signs, "all-plus, all-minus or a signing file");
  auto* grid_coham = grid->add_flag("--coham", flag_coham, "Delete the canonical co-Hamiltonian sequence");
  grid->add_option("--boxes", boxes_path, "Delete boxes listed as [i,j]")->excludes(grid_coham);
  grid->add_flag("--dot", flag_dot, "DOT output");

  auto* trigrid = app.add_subcommand("trigrid", "Emit a triangulated m x n grid");
  trigrid->add_option("m", m, "Rows")->required();
  trigrid->add_option("n", n, "Columns")->required();
  trigrid->add_option("--policy", policy, "Diagonal choice")->check(CLI::IsMember({"rising", "falling-corner"}));
  trigrid->add_option("--signs", signs, "all-plus, all-minus or a signing file");
  trigrid->add_option("--delete", deletions, "Delete an edge given as 'h i j', 'v i j' or 'd i j'");
  trigrid->add_flag("--dot", flag_dot, "DOT output");

  auto* ladder = app.add_subcommand("certify-ladder", "Certify a ladder configuration");
  ladder->add_option("file", file, "Graph file")->required();
  ladder->add_option("config", second_file, "Config file")->required();

  auto* hex = app.add_subcommand("certify-hex", "Certify a hexagon configuration");
  hex->add_option("file", file, "Graph file")->required();
  hex->add_option("config", second_file, "Config file")->required();

  auto* export_dot = app.add_subcommand("export-dot", "Graph or dual as DOT");
  export_dot->add_option("file", file, "Graph file")->required();
  export_dot->add_flag("--dual", flag_dual, "Export the weak dual");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (faces->parsed()) {
      print_faces(load_graph(file), out);
    } else if (dual->parsed()) {
      const auto g = load_graph(file);
      const auto d = weak_dual(g);
      if (flag_dot) {
        out << to_dot(d);
      } else {
        print_dual(d, out);
      }
      if (!eliminate.empty()) {
        const auto trace = psg::eliminate(d, policy_from(eliminate));
        for (const auto& s : trace.steps)
          out << "remove f" << s.face << " phi=" << s.phi << " deg=" << s.degree << '\n';
        out << "status=" << (trace.status == EliminationTrace::Status::Tree ? "tree" : "stuck")
            << " remaining :" << face_list(trace.remaining) << '\n';
      }
    } else if (check->parsed()) {
      const auto g = load_graph(file);
      const bool two = g.vertex_count() >= 3 && is_two_connected(g);
      out << "vertices=" << g.vertex_count() << " edges=" << g.edge_count() << " faces=" << g.face_count()
          << " euler=" << static_cast<long>(g.vertex_count()) - static_cast<long>(g.edge_count()) +
                              static_cast<long>(g.face_count())
          << '\n';
      out << "two_connected=" << (two ? "yes" : "no") << '\n';
      out << "outerplane=" << (is_outerplane(g) ? "yes" : "no") << '\n';
      out << "interior=" << classify_vertices(g).interior.size() << '\n';
      out << "outer_product=" << (verify_outer_product(g) ? "ok" : "violated") << '\n';
      out << "dual_tree=" << (!two ? "n/a" : dual_is_tree(g) ? "yes" : "no") << '\n';
    } else if (ham->parsed()) {
      const auto g = load_graph(file);
      const auto result = enumerate_hamiltonian(g, oracle_limit(limit));
      out << "circles=" << result.circles.size() << " truncated=" << (result.truncated ? "yes" : "no") << '\n';
      for (const auto& c : result.circles) out << circle_line(g, "circle", c) << '\n';
    } else if (census->parsed()) {
      const auto g = load_graph(file);
      const std::size_t cap = oracle_limit(limit);
      const auto c = sign_census(g, cap);
      out << "positive=" << c.positives << " negative=" << c.negatives << '\n';
      if (c.positive_witness) out << circle_line(g, "witness", *c.positive_witness) << '\n';
      if (c.negative_witness) out << circle_line(g, "witness", *c.negative_witness) << '\n';
      if (flag_sequences) {
        const auto w = opposite_sign_witness(g, cap);
        if (!w) {
          out << "opposite_sign_sequences=none\n";
        } else {
          out << "sequence positive product=" << symbol(face_product(g, w->first.final_bounded)) << '\n';
          print_sequence(g, w->first, out);
          out << "sequence negative product=" << symbol(face_product(g, w->second.final_bounded)) << '\n';
          print_sequence(g, w->second, out);
        }
      }
    } else if (peel->parsed()) {
      const auto g = load_graph(file);
      const auto walk = parse_walk(circle_text);
      const auto c = load([&] { return Circle::from_vertices(g, walk); });
      out << edge_text(g, peel_step(g, c)) << '\n';
    } else if (coham->parsed()) {
      const auto g = load_graph(file);
      if (!circle_text.empty()) {
        const auto walk = parse_walk(circle_text);
        const auto c = load([&] { return Circle::from_vertices(g, walk); });
        const auto seq = coham_from_circle(g, c);
        print_sequence(g, seq, out);
        out << circle_line(g, "circle", c) << '\n';
      } else {
        const std::string text = read_file(sequence_path);
        const auto edges = load([&] { return parse_edge_sequence(text, g); });
        const auto outcome = apply_coham(g, edges);
        print_sequence(g, outcome.sequence, out);
        out << circle_line(g, "circle", outcome.hamiltonian_set.circle) << '\n';
      }
    } else if (grid->parsed()) {
      const GridGraph gg = build_grid(grid_spec(m, n, signs));
      PlaneSignedGraph g = gg.graph();
      if (flag_coham) {
        const auto seq = canonical_coham_grid(m, n);
        g = apply_coham(gg.graph(), seq.edges).final_graph;
      } else if (!boxes_path.empty()) {
        const std::string text = read_file(boxes_path);
        const auto boxes = load([&] { return parse_box_sequence(text); });
        std::vector<FaceId> fs;
        for (const Box& b : boxes) fs.push_back(gg.box_face(b));
        g = apply_face_sequence(gg.graph(), fs).final_graph;
      }
      out << (flag_dot ? to_dot(g, grid_names(gg)) : serialize(g));
    } else if (trigrid->parsed()) {
      GridSpec spec = grid_spec(m, n, signs);
      if (signs == "all-minus") all_minus_diagonals(spec);
      const auto pol = policy == "falling-corner" ? DiagonalPolicy::falling_corner() : DiagonalPolicy::all_rising();
      const GridGraph gg = build_triangulated_grid(spec, pol);
      PlaneSignedGraph g = gg.graph();
      std::vector<EdgeId> ids;
      for (const auto& d : deletions) ids.push_back(gg.edge(parse_label(d)));
      std::sort(ids.begin(), ids.end(), std::greater<>());
      for (EdgeId e : ids) g = g.delete_edge(e).graph;
      out << (flag_dot ? to_dot(g, grid_names(gg)) : serialize(g));
    } else if (ladder->parsed()) {
      const auto g = load_graph(file);
      const std::string text = read_file(second_file);
      const auto cfg = load([&] { return parse_ladder_config(text, g); });
      print_pair(g, certify_ladder(g, cfg), out);
    } else if (hex->parsed()) {
      const auto g = load_graph(file);
      const std::string text = read_file(second_file);
      const auto cfg = load([&] { return parse_hex_config(text, g); });
      print_pair(g, certify_hexagon(g, cfg), out);
    } else if (export_dot->parsed()) {
      const auto g = load_graph(file);
      out << (flag_dual ? to_dot(weak_dual(g)) : to_dot(g));
    }
  } catch (const InputError& e) {
    err << "input error: " << e.message << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace psg::cli
