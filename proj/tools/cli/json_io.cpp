#include "json_io.hpp"

#include <cmath>

namespace qdom::cli {

namespace {

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

}  // namespace

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.order()}, {"edges", std::move(edges)}};
}

json report_to_json(const VerificationReport& r) {
  json margins = json::object();
  for (const auto& [k, v] : r.margins) margins[k] = number_or_null(v);
  json witnesses = json::array();
  for (const auto& w : r.witnesses) {
    json item = {{"label", w.label}, {"graph", graph_to_json(w.graph)}};
    if (w.value) item["value"] = number_or_null(*w.value);
    if (!w.note.empty()) item["note"] = w.note;
    witnesses.push_back(std::move(item));
  }
  return {{"claim", r.claim},
          {"outcome", std::string(to_string(r.outcome))},
          {"scope", r.scope},
          {"margins", std::move(margins)},
          {"counts", r.counts},
          {"notes", r.notes},
          {"witnesses", std::move(witnesses)}};
}

json trace_to_json(const ExtractionTrace& t) {
  json stitches = json::array();
  for (const auto& s : t.stitches) {
    json item = {{"path", s.path}, {"case", s.label}, {"component", s.component}};
    if (!s.absorbed.empty()) item["absorbed"] = s.absorbed;
    stitches.push_back(std::move(item));
  }
  json attachments = json::array();
  for (const auto& a : t.attachments) {
    attachments.push_back({{"vertex", a.vertex}, {"dominator", a.dominator}});
  }
  return {{"dominating_set", t.dominating_set},
          {"cycle", t.cycle.vertices},
          {"d_c", t.d_c},
          {"s", t.s},
          {"stitches", std::move(stitches)},
          {"pendant_attachments", std::move(attachments)},
          {"order_bound_holds", t.order_bound_holds}};
}

}  // namespace qdom::cli
