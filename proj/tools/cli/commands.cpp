#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json_io.hpp"
#include "qdom/claims.hpp"
#include "qdom/domination.hpp"
#include "qdom/enumerate.hpp"
#include "qdom/errors.hpp"
#include "qdom/extremal.hpp"
#include "qdom/graph_io.hpp"
#include "qdom/spanning.hpp"
#include "qdom/spectral.hpp"

namespace qdom::cli {

namespace {

struct LoadResult {
  std::optional<Graph> graph;
  int code = kOk;
};

LoadResult load(const std::string& path, std::ostream& err) {
  try {
    return {read_edge_list_file(path), kOk};
  } catch (const ParseError& e) {
    err << "error: " << path << ": " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return {std::nullopt, kUsage};
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

int parse_int(const std::string& s) {
  std::size_t used = 0;
  const int v = std::stoi(s, &used);
  if (used != s.size()) throw std::invalid_argument("not an integer: '" + s + "'");
  return v;
}

// POS:ROOT:u-v,u-v,...
TreeAttachment parse_attachment(const std::string& spec) {
  const auto parts = split(spec, ':');
  if (parts.size() != 3) throw std::invalid_argument("attachment must be POS:ROOT:u-v,...");
  TreeAttachment a;
  a.position = parse_int(parts[0]);
  a.tree.root = parse_int(parts[1]);
  int max_id = a.tree.root;
  for (const auto& e : split(parts[2], ',')) {
    const auto ends = split(e, '-');
    if (ends.size() != 2) throw std::invalid_argument("tree edge must be u-v: '" + e + "'");
    const int u = parse_int(ends[0]);
    const int v = parse_int(ends[1]);
    if (u < 0 || v < 0) throw std::invalid_argument("tree vertex ids must be >= 0");
    a.tree.edges.emplace_back(u, v);
    max_id = std::max({max_id, u, v});
  }
  a.tree.order = max_id + 1;
  return a;
}

void emit_graph(const Graph& g, const std::string& format, std::ostream& out) {
  out << (format == "dot" ? to_dot(g) : to_edge_list(g));
}

int cmd_analyze(const std::string& path, std::ostream& out, std::ostream& err) {
  const auto t0 = std::chrono::steady_clock::now();
  auto loaded = load(path, err);
  if (!loaded.graph) return loaded.code;
  const Graph& g = *loaded.graph;
  if (!is_connected(g)) {
    err << "error: " << path << ": graph is disconnected\n";
    return kDisconnected;
  }
  const EigenPair pair = least_q_eigenpair(g);
  const DominatingSet d = domination_number(g);
  const auto odd = odd_girth(g);
  const double elapsed =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  json rec = {{"input", path},
              {"n", g.order()},
              {"m", g.size()},
              {"bipartite", !odd.has_value()},
              {"odd_girth", odd ? json(odd->length()) : json(nullptr)},
              {"gamma", d.size},
              {"dominating_set", d.vertices()},
              {"q_min", pair.value},
              {"eigenvector", pair.vector},
              {"spectral_gap", std::isfinite(pair.gap) ? json(pair.gap) : json(nullptr)},
              {"elapsed_ms", elapsed}};
  out << rec.dump() << '\n';
  return kOk;
}

int cmd_construct(const std::string& family, const std::optional<int>& n,
                  const std::optional<int>& s, const std::optional<int>& l,
                  const std::optional<int>& k, const std::vector<std::string>& attach,
                  const std::string& format, std::ostream& out, std::ostream& err) {
  try {
    if (family == "c-star") {
      if (!n || !s || !l) throw std::invalid_argument("c-star needs --n, --s and --l");
      emit_graph(construct_c_star({*n, *s, *l}), format, out);
    } else {
      if (!k) throw std::invalid_argument("cycle-trees needs --k");
      std::vector<TreeAttachment> attachments;
      for (const auto& a : attach) attachments.push_back(parse_attachment(a));
      emit_graph(construct_cycle_trees(*k, attachments), format, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}

int cmd_extract(const std::string& path, const std::string& h_out, const std::string& dset,
                std::ostream& out, std::ostream& err) {
  auto loaded = load(path, err);
  if (!loaded.graph) return loaded.code;
  const Graph& g = *loaded.graph;
  if (!is_connected(g)) {
    err << "error: " << path << ": graph is disconnected\n";
    return kDisconnected;
  }
  if (is_bipartite(g)) {
    err << "error: " << path << ": graph is bipartite; extraction needs an odd cycle\n";
    return kBipartite;
  }
  std::optional<DominatingSet> supplied;
  if (!dset.empty()) {
    std::vector<Vertex> members;
    try {
      for (const auto& v : split(dset, ',')) members.push_back(parse_int(v));
      for (Vertex v : members) {
        if (!g.contains(v)) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
      }
    } catch (const std::exception& e) {
      err << "error: --dominating-set: " << e.what() << '\n';
      return kUsage;
    }
    supplied = DominatingSet{to_mask(members), static_cast<int>(members.size()), false};
  }

  ExtractionTrace trace;
  Graph h;
  try {
    h = extract_unicyclic_into(g, supplied ? &*supplied : nullptr, trace);
  } catch (const TheoremViolation& e) {
    out << json{{"input", path}, {"error", e.what()}, {"claim", e.claim()},
                {"trace", trace_to_json(trace)}}
               .dump()
        << '\n';
    return kTheoremViolation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  const int gamma_g = domination_number(g).size;
  const int gamma_h = domination_number(h).size;
  json verification = {{"spanning", h.order() == g.order()},
                       {"edges", h.size()},
                       {"connected", is_connected(h)},
                       {"girth_h", girth(h)->length()},
                       {"odd_girth_g", odd_girth(g)->length()},
                       {"gamma_g", gamma_g},
                       {"gamma_h", gamma_h},
                       {"dominating_set_dominates_h", dominates(h, to_mask(trace.dominating_set))}};
  out << json{{"input", path},
              {"n", g.order()},
              {"m", g.size()},
              {"h", graph_to_json(h)},
              {"trace", trace_to_json(trace)},
              {"verification", verification}}
             .dump()
      << '\n';
  if (!h_out.empty()) {
    std::ofstream file(h_out);
    if (!file) {
      err << "error: cannot write " << h_out << '\n';
      return kUsage;
    }
    file << to_edge_list(h);
  }
  return kOk;
}

int cmd_verify(const std::string& claim, const ClaimBounds& bounds, std::ostream& out,
               std::ostream& err) {
  std::vector<std::string> ids;
  ClaimBounds used = bounds;
  if (claim == "all") {
    ids = claim_ids();
    used = ClaimBounds{};
    used.seed = bounds.seed;
    used.jobs = bounds.jobs;
    used.extended = bounds.extended;
  } else {
    ids = {claim};
  }
  bool all_passed = true;
  for (const auto& id : ids) {
    try {
      const VerificationReport r = run_claim(id, used);
      all_passed = all_passed && r.passed();
      out << report_to_json(r).dump() << std::endl;
    } catch (const UnknownClaim& e) {
      err << "error: " << e.what() << "; known claims:";
      for (const auto& known : claim_ids()) err << ' ' << known;
      err << '\n';
      return kUsage;
    } catch (const std::exception& e) {
      err << "error: " << id << ": " << e.what() << '\n';
      return kUsage;
    }
  }
  return all_passed ? kOk : kFailed;
}

int cmd_enumerate(int n, bool nonbipartite, bool unicyclic, const std::optional<int>& gamma,
                  int jobs, std::ostream& out, std::ostream& err) {
  std::vector<CanonicalGraph> classes;
  try {
    classes = enumerate_connected(n, {nonbipartite, unicyclic, gamma}, jobs);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  out << "n,form,m,gamma,q_min,odd_girth\n";
  for (const auto& c : classes) {
    const Graph& g = c.graph;
    const auto odd = odd_girth(g);
    std::ostringstream q;
    q.precision(12);
    q << least_q_eigenpair(g).value;
    out << g.order() << ',' << c.form << ',' << g.size() << ',' << domination_number(g).size << ','
        << q.str() << ',' << (odd ? std::to_string(odd->length()) : "") << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"qdom: least signless Laplacian eigenvalues and domination numbers"};
  app.name("qdom");
  app.require_subcommand(1);

  std::string path;
  auto* analyze = app.add_subcommand("analyze", "Report n, m, odd girth, gamma and q_min as JSON");
  analyze->add_option("path", path, "Edge-list file")->required();

  std::string family;
  std::optional<int> n, s, l, k;
  std::vector<std::string> attach;
  std::string format = "edgelist";
  auto* construct = app.add_subcommand("construct", "Emit C*_{s,l} or an odd cycle with trees");
  construct->add_option("family", family, "c-star or cycle-trees")
      ->required()
      ->check(CLI::IsMember({"c-star", "cycle-trees"}));
  construct->add_option("--n", n, "Order (c-star)");
  construct->add_option("--s", s, "Odd cycle length (c-star)");
  construct->add_option("--l", l, "Path length (c-star)");
  construct->add_option("--k", k, "Odd cycle length (cycle-trees)");
  construct->add_option("--attach", attach, "POS:ROOT:u-v,u-v,... (cycle-trees, repeatable)");
  construct->add_option("--format", format, "edgelist or dot")
      ->check(CLI::IsMember({"edgelist", "dot"}));

  std::string extract_path, h_out, dset;
  auto* extract = app.add_subcommand("extract", "Unicyclic spanning subgraph with equal gamma");
  extract->add_option("path", extract_path, "Edge-list file")->required();
  extract->add_option("--h-out", h_out, "Also write H as an edge list");
  extract->add_option("--dominating-set", dset, "Minimum dominating set to use, e.g. 0,3,5");

  std::string claim;
  ClaimBounds bounds;
  std::optional<int> max_n, vn, gamma, vs, vk, trials;
  auto* verify = app.add_subcommand("verify", "Run a claim sweep; one JSON report per line");
  verify->add_option("--claim", claim, "Claim id or 'all'")->required();
  verify->add_option("--max-n", max_n);
  verify->add_option("--n", vn);
  verify->add_option("--gamma", gamma);
  verify->add_option("--s", vs);
  verify->add_option("--k", vk);
  verify->add_option("--trials", trials);
  verify->add_option("--seed", bounds.seed, "RNG seed (default 0)");
  verify->add_option("--jobs", bounds.jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_flag("--extended", bounds.extended, "Include the n = 8 exhaustive tiers");

  int en = 0;
  bool nonbipartite = false, unicyclic = false;
  std::optional<int> egamma;
  int ejobs = 1;
  auto* enumerate = app.add_subcommand("enumerate", "CSV of connected classes of order n");
  enumerate->add_option("--n", en)->required();
  enumerate->add_flag("--nonbipartite", nonbipartite);
  enumerate->add_flag("--unicyclic", unicyclic);
  enumerate->add_option("--gamma", egamma);
  enumerate->add_option("--jobs", ejobs)->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*analyze) return cmd_analyze(path, out, err);
    if (*construct) return cmd_construct(family, n, s, l, k, attach, format, out, err);
    if (*extract) return cmd_extract(extract_path, h_out, dset, out, err);
    if (*verify) {
      bounds.max_n = max_n;
      bounds.n = vn;
      bounds.gamma = gamma;
      bounds.s = vs;
      bounds.k = vk;
      bounds.trials = trials;
      return cmd_verify(claim, bounds, out, err);
    }
    if (*enumerate) return cmd_enumerate(en, nonbipartite, unicyclic, egamma, ejobs, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace qdom::cli
