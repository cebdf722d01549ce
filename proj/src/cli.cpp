#include "stick/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "stick/builders.hpp"
#include "stick/generators.hpp"
#include "stick/obstructions.hpp"
#include "stick/recognizer.hpp"
#include "stick/structure.hpp"

namespace stick::cli {

namespace {

class InputError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw InputError("cannot write " + path);
}

BipartiteGraph load_graph(const std::string& path, std::ostream& err) {
  std::vector<std::string> warnings;
  BipartiteGraph g = parse_graph(read_file(path), &warnings);
  for (const auto& w : warnings) err << "warning: " << path << ": " << w << '\n';
  return g;
}

std::string a_label(int i) { return to_string(Vertex{Side::A, i}); }

std::string join(const std::vector<std::string>& parts, const char* sep = " ") {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

int cmd_check(const std::string& graph_path, const std::string& rep_path, std::ostream& out, std::ostream& err) {
  const BipartiteGraph g = load_graph(graph_path, err);
  const StickRepresentation rep = parse_representation(read_file(rep_path));
  const auto report = validate_representation(rep, g);
  if (report.ok()) {
    out << "OK\n";
    return kOk;
  }
  out << "INVALID\n";
  for (const auto& v : report.violations) out << "  " << v.message << '\n';
  return kNegative;
}

int cmd_recognize(const std::string& graph_path, std::int64_t budget, std::ostream& out, std::ostream& err) {
  const BipartiteGraph g = load_graph(graph_path, err);
  const RecognitionResult r = recognize(g, {budget});
  switch (r.verdict) {
    case Verdict::Yes:
      out << "STICK\n" << format_representation(*r.representation) << '\n';
      return kOk;
    case Verdict::No:
      out << "NON-STICK (exhaustive)\n";
      return kNegative;
    case Verdict::Unknown:
      out << "UNKNOWN (budget)\n";
      return kUnknown;
  }
  return kUnknown;
}

void print_certificate(const NonStickCertificate& cert, std::ostream& out) {
  const Side side = cert.orientation == Orientation::ASide ? Side::A : Side::B;
  auto label = [side](int i) { return to_string(Vertex{side, i}); };
  out << "NON-STICK (certified)\n";
  out << "orientation: " << (side == Side::A ? "A-side" : "B-side (role-swapped)") << '\n';
  out << "t v case p q w_p w_q overlap\n";
  for (const Witness& w : cert.witnesses)
    out << label(w.t) << ' ' << label(w.v) << ' ' << to_string(w.kind) << ' ' << label(w.p) << ' ' << label(w.q)
        << ' ' << w.w_p.word() << ' ' << w.w_q.word() << ' ' << w.overlap_index << '\n';
}

int cmd_certify(const std::string& graph_path, bool role_swap, std::ostream& out, std::ostream& err) {
  const BipartiteGraph g = load_graph(graph_path, err);
  const auto cert = certify_non_stick(g, role_swap);
  if (!cert) {
    out << "NO CERTIFICATE\n";
    return kOk;
  }
  print_certificate(*cert, out);
  return kNegative;
}

std::string region_list(const std::vector<Region>& rs) {
  std::vector<std::string> parts;
  for (Region r : rs) parts.push_back(to_string(r));
  return join(parts, ",");
}

std::string b_list(const BSet& s) {
  if (s.empty()) return "-";
  std::vector<std::string> parts;
  for (int b : s) parts.push_back(to_string(Vertex{Side::B, b}));
  return join(parts);
}

int classify_pair(const StickRepresentation& rep, const BipartiteGraph& g, int v, int t, std::ostream& out) {
  const Table2Report report = check_table2(rep, g, v, t);
  const Configuration& c = report.configuration;
  const EventPositions pos(rep);
  out << "pair v=" << a_label(v) << " t=" << a_label(t) << '\n';
  out << "configuration " << to_string(c.kind) << '\n';
  std::vector<std::string> anchors;
  for (const Event& e : c.boundaries) anchors.push_back(to_string(e));
  out << "anchors " << join(anchors) << '\n';
  out << "b1 " << b_list(c.partition.b1) << "\nb2 " << b_list(c.partition.b2) << "\nb3 " << b_list(c.partition.b3)
      << '\n';
  out << "beta3^1 " << b_list(c.beta3_1) << "\nbeta3^2 " << b_list(c.beta3_2) << "\nbeta3^3 " << b_list(c.beta3_3)
      << '\n';
  for (int r = 0; r < 4; ++r) {
    std::vector<std::string> events;
    for (const auto& entry : c.region_of)
      if (static_cast<int>(entry.region) == r && pos.of(entry.event) > pos.of(c.boundaries[0]))
        events.push_back(to_string(entry.event));
    out << to_string(static_cast<Region>(r)) << ": " << (events.empty() ? "-" : join(events)) << '\n';
  }
  const auto t1 = table1_violations(c, pos);
  out << "table1 " << (t1.empty() ? "ok" : "FAIL") << '\n';
  for (const auto& msg : t1) out << "  " << msg << '\n';
  for (const PartnerCheck& p : report.partners) {
    out << "partner " << a_label(p.partner) << " w=" << p.w.word() << " region=" << to_string(p.region)
        << " reachable=" << region_list(p.equivalent) << ' '
        << (p.placement_ok ? "ok (" + to_string(*p.accepted) + ")" : std::string("FAIL")) << '\n';
    if (!p.placement_ok)
      for (const auto& n : p.notes) out << "  " << n << '\n';
  }
  for (const PairCheck& p : report.pairs)
    out << "same-region " << a_label(p.p) << ' ' << a_label(p.q) << ' ' << to_string(p.region) << ' '
        << (p.ok ? "ok" : "FAIL") << '\n';
  const bool ok = t1.empty() && report.ok();
  out << (ok ? "CONFORMS" : "DOES NOT CONFORM") << '\n';
  return ok ? kOk : kNegative;
}

int cmd_classify(const std::string& graph_path, const std::string& rep_path, const std::vector<int>& pair,
                 std::ostream& out, std::ostream& err) {
  const BipartiteGraph g = load_graph(graph_path, err);
  const StickRepresentation rep = parse_representation(read_file(rep_path));
  const auto report = validate_representation(rep, g);
  if (!report.ok()) throw InputError("representation does not match the graph: " + report.violations.front().message);
  const EventPositions pos(rep);
  if (!pair.empty()) {
    const int v = pair[0] - 1, t = pair[1] - 1;
    if (v < 0 || v >= g.a_count() || t < 0 || t >= g.a_count() || v == t)
      throw InputError("--pair needs two distinct A-vertices between 1 and " + std::to_string(g.a_count()));
    return classify_pair(rep, g, v, t, out);
  }
  bool ok = true;
  for (int v = 0; v < g.a_count(); ++v)
    for (int t = 0; t < g.a_count(); ++t) {
      if (v == t || pos.a_tip(v) > pos.a_tip(t)) continue;
      const Table2Report t2 = check_table2(rep, g, v, t);
      const bool t1 = table1_violations(t2.configuration, pos).empty();
      ok = ok && t1 && t2.ok();
      out << a_label(v) << ' ' << a_label(t) << ' ' << to_string(t2.configuration.kind) << " table1 "
          << (t1 ? "ok" : "FAIL") << " table2 " << (t2.ok() ? "ok" : "FAIL") << '\n';
    }
  const auto forbidden = check_forbidden_pairs(rep, g);
  for (const auto& h : forbidden.hits)
    out << "forbidden (" << h.rule << ") v=" << a_label(h.v) << " t=" << a_label(h.t) << " mates " << a_label(h.p)
        << ' ' << a_label(h.q) << '\n';
  out << "forbidden pairs " << (forbidden.ok() ? "none" : "FOUND") << '\n';
  ok = ok && forbidden.ok();
  out << (ok ? "CONFORMS" : "DOES NOT CONFORM") << '\n';
  return ok ? kOk : kNegative;
}

void emit_built(const BipartiteGraph& g, const StickRepresentation& rep, std::vector<std::string> comments,
                const std::string& graph_out, const std::string& rep_out, std::ostream& out) {
  const std::string rep_text = format_representation(rep);
  if (graph_out.empty()) {
    comments.push_back("rep: " + rep_text);
    out << format_graph(g, comments);
  } else {
    write_file(graph_out, format_graph(g, comments));
  }
  if (!rep_out.empty()) write_file(rep_out, rep_text + '\n');
}

int cmd_gen(const std::string& family, const std::vector<long long>& params, std::uint64_t seed, bool bipartite,
            std::ostream& out, std::ostream& err) {
  auto need = [&](std::size_t count) {
    if (params.size() != count)
      throw InputError("gen " + family + " takes " + std::to_string(count) + " size argument(s)");
    for (long long p : params)
      if (p < 0 || p > 100000) throw InputError("size argument out of range");
  };
  auto arg = [&](std::size_t k) { return static_cast<int>(params[k]); };
  if (family == "path") {
    need(1);
    out << format_graph(gen_path(arg(0)));
  } else if (family == "cycle") {
    need(1);
    out << format_graph(gen_even_cycle(arg(0)));
  } else if (family == "tree") {
    need(1);
    out << format_graph(gen_random_tree(arg(0), seed));
  } else if (family == "jk") {
    need(1);
    const BipartiteGraph g = gen_jk(arg(0));
    if (arg(0) % 2 == 0) {
      err << "warning: J_k is claimed non-Stick only for odd k\n";
      err << "warning: certifier on J_" << arg(0) << ": "
          << (certify_non_stick(g) ? "certificate found" : "no certificate") << '\n';
    }
    out << format_graph(g);
  } else if (family == "py2") {
    need(0);
    out << format_graph(gen_py2());
  } else if (family == "interval-bigraph") {
    need(2);
    out << format_graph(gen_random_interval_bigraph(arg(0), arg(1), seed));
  } else if (family == "bip-permutation") {
    need(2);
    out << format_graph(gen_random_bipartite_permutation(arg(0), arg(1), seed));
  } else if (family == "arcs") {
    need(2);
    out << format_arc_family(gen_random_arc_family(arg(0), arg(1), seed));
  } else if (family == "chords") {
    need(1);
    out << format_chord_family(bipartite ? gen_random_bipartite_chord_family(arg(0), seed)
                                         : gen_random_chord_family(arg(0), seed));
  } else {
    throw InputError("unknown family '" + family + "'");
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stick graph toolkit", "stickgraph"};
  app.require_subcommand(1);

  std::string graph_path, rep_path, input_path, graph_out, rep_out, family, style = "flat";
  std::int64_t budget = SearchBudget{}.max_nodes;
  bool role_swap = false, bipartite = false;
  std::vector<int> pair;
  std::vector<long long> params;
  std::uint64_t seed = 1;

  auto* check = app.add_subcommand("check", "Validate a representation against a graph");
  check->add_option("graph", graph_path, "Graph file")->required();
  check->add_option("rep", rep_path, "Representation file")->required();

  auto* recog = app.add_subcommand("recognize", "Exact Stick recognition");
  recog->add_option("graph", graph_path, "Graph file")->required();
  recog->add_option("--budget", budget, "Search node limit")->check(CLI::PositiveNumber);

  auto* cert = app.add_subcommand("certify", "Search for a non-Stick certificate");
  cert->add_option("graph", graph_path, "Graph file")->required();
  cert->add_flag("--role-swap", role_swap, "Also try the graph with sides exchanged");

  auto* classify = app.add_subcommand("classify", "Configuration and partner analysis of a representation");
  classify->add_option("graph", graph_path, "Graph file")->required();
  classify->add_option("rep", rep_path, "Representation file")->required();
  classify->add_option("--pair", pair, "A-vertices v t (1-based)")->expected(2);

  auto* arcs = app.add_subcommand("from-arcs", "Build a representation from a circular-arc family");
  arcs->add_option("arcs", input_path, "Arc file")->required();
  arcs->add_option("--graph-out", graph_out, "Write the graph here");
  arcs->add_option("--rep-out", rep_out, "Write the representation here");

  auto* chords = app.add_subcommand("from-chords", "Build a representation from a chord family");
  chords->add_option("chords", input_path, "Chord file")->required();
  chords->add_option("--graph-out", graph_out, "Write the graph here");
  chords->add_option("--rep-out", rep_out, "Write the representation here");

  auto* gen = app.add_subcommand("gen", "Generate a graph or geometric family");
  gen->add_option("family", family,
                  "path | cycle | tree | jk | py2 | interval-bigraph | bip-permutation | arcs | chords")
      ->required();
  gen->add_option("sizes", params, "Size arguments");
  gen->add_option("--seed", seed, "Random seed");
  gen->add_flag("--bipartite", bipartite, "chords: only families with a bipartite crossing graph");

  auto* render = app.add_subcommand("render", "Draw a representation as SVG");
  render->add_option("rep", rep_path, "Representation file")->required();
  render->add_option("--style", style, "flat | slope")->check(CLI::IsMember({"flat", "slope"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (check->parsed()) return cmd_check(graph_path, rep_path, out, err);
    if (recog->parsed()) return cmd_recognize(graph_path, budget, out, err);
    if (cert->parsed()) return cmd_certify(graph_path, role_swap, out, err);
    if (classify->parsed()) return cmd_classify(graph_path, rep_path, pair, out, err);
    if (arcs->parsed()) {
      const Built b = arcs_to_stick(parse_arc_family(read_file(input_path)));
      emit_built(b.graph, b.representation, {}, graph_out, rep_out, out);
      return kOk;
    }
    if (chords->parsed()) {
      const ChordFamily fam = parse_chord_family(read_file(input_path));
      const BuiltChords b = chords_to_stick(fam);
      std::vector<std::string> comments;
      for (std::size_t c = 0; c < fam.chords.size(); ++c)
        comments.push_back("chord " + fam.chords[c].id + " -> " + to_string(b.vertex_of[c]));
      emit_built(b.graph, b.representation, comments, graph_out, rep_out, out);
      return kOk;
    }
    if (gen->parsed()) return cmd_gen(family, params, seed, bipartite, out, err);
    if (render->parsed()) {
      const StickRepresentation rep = parse_representation(read_file(rep_path));
      out << render_svg(rep, style == "slope" ? RenderStyle::Slope : RenderStyle::Flat);
      return kOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace stick::cli
