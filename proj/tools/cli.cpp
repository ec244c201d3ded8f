#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "rwgraph/rwgraph.hpp"

namespace rwg::cli {

namespace {

using json = nlohmann::ordered_json;

struct Settings {
  std::string type;
  int n = 0;
  std::string element;
  std::string format = "text";
  std::string output;
  std::uint64_t budget = kDefaultVertexBudget;
  unsigned workers = 0;
  std::uint64_t seed = 0;
  std::size_t exhaustive_threshold = 100'000;
  std::string mode = "exact";
  std::string source;
  bool all_sources = false;
  bool crossings = false;
  bool with_diameter = false;
  std::string family;
  int param = 0;
};

std::optional<std::uint64_t> env_u64(const char* name) {
  const char* value = std::getenv(name);
  if (!value || !*value) return std::nullopt;
  char* end = nullptr;
  auto parsed = std::strtoull(value, &end, 10);
  if (*end != '\0') throw InvalidInput(std::string("environment variable ") + name + " is not an integer: " + value);
  return parsed;
}

json spec_json(const GroupSpec& spec) {
  return {{"family", spec.family() == Family::A ? "A" : "B"}, {"n", spec.n()}};
}

class Command {
 public:
  Command(const Settings& s, std::ostream& out, std::ostream& err) : s_(s), out_(out), err_(err) {}

  GroupSpec spec() const {
    if (s_.type.empty()) throw InvalidInput("missing --type (A or B)");
    if (s_.n == 0) throw InvalidInput("missing --n");
    return GroupSpec(parse_family(s_.type), s_.n);
  }

  Element element() const {
    if (s_.element.empty()) throw InvalidInput("missing --element (one-line notation or w0)");
    return Element::parse(spec(), s_.element);
  }

  BuildOptions build_options() const { return {s_.budget, s_.workers}; }

  DiameterOptions diameter_options() const {
    DiameterOptions o;
    o.exhaustive_threshold = s_.exhaustive_threshold;
    o.workers = s_.workers;
    o.seed = s_.seed;
    return o;
  }

  void check_format(std::initializer_list<const char*> allowed) const {
    for (const char* f : allowed)
      if (s_.format == f) return;
    throw InvalidInput("format '" + s_.format + "' is not available for this subcommand");
  }

  void emit(const std::string& text) {
    if (s_.output.empty()) {
      out_ << text;
      return;
    }
    std::ofstream file(s_.output, std::ios::binary);
    if (!file) throw InvalidInput("cannot open output file " + s_.output);
    file << text;
  }

  int words() {
    check_format({"text", "json"});
    auto w = element();
    auto list = enumerate_words(w, EnumerateOptions{s_.budget});
    if (s_.format == "json") {
      json doc = {{"spec", spec_json(w.spec())}, {"element", w.to_string()}, {"count", list.size()}};
      auto& arr = doc["words"] = json::array();
      for (const auto& r : list) arr.push_back(r.to_string());
      emit(doc.dump(2) + "\n");
    } else {
      std::string text;
      for (const auto& r : list) text += r.to_string() + "\n";
      emit(text);
    }
    return kOk;
  }

  int graph() {
    check_format({"text", "json", "dot"});
    auto g = build_graph(element(), build_options());
    std::optional<DiameterResult> d;
    if (s_.with_diameter) d = diameter(g, DiameterMode::Exact, diameter_options());
    if (s_.format == "dot") {
      emit(to_dot(g));
    } else if (s_.format == "json") {
      emit(to_json(g, d));
    } else {
      std::ostringstream text;
      text << "G(w) for w = " << g.element().to_string() << " in " << g.spec().name() << ": " << g.vertex_count()
           << (g.vertex_count() == 1 ? " vertex, " : " vertices, ") << g.edge_count()
           << (g.edge_count() == 1 ? " edge\n" : " edges\n");
      for (const auto& e : g.edges()) {
        text << g.vertices()[e.u].to_string() << " -- " << g.vertices()[e.v].to_string() << "  "
             << g.edge_label(e).name() << "\n";
      }
      if (d) text << "diameter " << d->value << (d->exhaustive ? "" : " (lower bound, not exhaustive)") << "\n";
      emit(text.str());
    }
    return kOk;
  }

  Word source_word(const Element& w) const {
    return s_.source.empty() ? canonical_word(w) : Word::parse(w.spec(), s_.source);
  }

  int distance() {
    check_format({"text", "json"});
    auto w = element();
    auto g = build_graph(w, build_options());
    auto report = bfs_distances(g, source_word(w));
    if (s_.format == "json") {
      json doc = {{"spec", spec_json(w.spec())}, {"element", w.to_string()}, {"source", report.source.to_string()},
                  {"eccentricity", report.eccentricity}};
      auto& rows = doc["distances"] = json::array();
      for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
        rows.push_back({{"word", g.vertices()[v].to_string()},
                        {"distance", report.distances[v]},
                        {"separation", report.distances[v] - report.lower_bound_gaps[v]},
                        {"gap", report.lower_bound_gaps[v]}});
      }
      emit(doc.dump(2) + "\n");
    } else {
      std::ostringstream text;
      text << "source " << report.source.to_string() << ", eccentricity " << report.eccentricity << "\n";
      text << "word distance separation gap\n";
      for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
        text << g.vertices()[v].to_string() << " " << report.distances[v] << " "
             << report.distances[v] - report.lower_bound_gaps[v] << " " << report.lower_bound_gaps[v] << "\n";
      }
      emit(text.str());
    }
    return kOk;
  }

  int diameter_cmd() {
    check_format({"text", "json"});
    auto w = element();
    DiameterMode mode;
    if (s_.mode == "exact") {
      mode = DiameterMode::Exact;
    } else if (s_.mode == "theorem") {
      mode = DiameterMode::TheoremShortcut;
    } else {
      throw InvalidInput("unknown --mode '" + s_.mode + "' (expected exact or theorem)");
    }
    DiameterResult d;
    if (mode == DiameterMode::TheoremShortcut) {
      if (!w.is_longest()) {
        throw UnsupportedMode("the theorem shortcut applies only to w0; " + w.to_string() + " is not w0 of " +
                              w.spec().name() + " (use --mode exact, or conjecture for bounds)");
      }
      d = {arrangement_for(w.spec()).flat_count(), true, "theorem"};
    } else {
      d = diameter(build_graph(w, build_options()), mode, diameter_options());
    }
    if (s_.format == "json") {
      json doc = {{"spec", spec_json(w.spec())}, {"element", w.to_string()}, {"diameter", d.value},
                  {"exhaustive", d.exhaustive}, {"method", d.method}};
      emit(doc.dump(2) + "\n");
    } else {
      emit(std::to_string(d.value) + (d.exhaustive ? "" : " (lower bound, not exhaustive)") + "\n");
    }
    return kOk;
  }

  int canonical() {
    check_format({"text", "json"});
    auto w = element();
    auto r = canonical_word(w);
    auto seq = crossing_sequence(r);
    if (s_.format == "json") {
      json doc = {{"spec", spec_json(w.spec())}, {"element", w.to_string()}, {"word", r.to_string()}};
      auto& arr = doc["crossings"] = json::array();
      for (const auto& h : seq.crossings) arr.push_back(h.name());
      emit(doc.dump(2) + "\n");
    } else {
      std::string text = r.to_string() + "\n";
      if (s_.crossings) {
        for (std::size_t k = 0; k < seq.crossings.size(); ++k) text += (k ? " " : "") + seq.crossings[k].name();
        text += "\n";
      }
      emit(text);
    }
    return kOk;
  }

  int accessible() {
    check_format({"text", "json"});
    auto w = element();
    auto g = build_graph(w, build_options());
    if (s_.all_sources) {
      json rows = json::array();
      std::string text;
      std::size_t inaccessible = 0;
      for (const auto& r : g.vertices()) {
        auto res = is_accessible(g, r);
        if (res.accessible) continue;
        ++inaccessible;
        text += r.to_string() + "\n";
        rows.push_back({{"word", r.to_string()},
                        {"witness", res.witness->word.to_string()},
                        {"distance", res.witness->distance},
                        {"separation", res.witness->separation}});
      }
      if (s_.format == "json") {
        json doc = {{"spec", spec_json(w.spec())}, {"element", w.to_string()}, {"vertexCount", g.vertex_count()},
                    {"inaccessible", rows}};
        emit(doc.dump(2) + "\n");
      } else {
        emit(text);
      }
      err_ << inaccessible << " of " << g.vertex_count() << " words are not L2-accessible\n";
      return kOk;
    }

    const bool canonical_source = s_.source.empty();
    auto r0 = source_word(w);
    auto res = is_accessible(g, r0);
    if (s_.format == "json") {
      json doc = {{"spec", spec_json(w.spec())}, {"element", w.to_string()}, {"source", r0.to_string()},
                  {"accessible", res.accessible}, {"eccentricity", res.eccentricity}};
      if (res.witness) {
        doc["witness"] = {{"word", res.witness->word.to_string()},
                          {"distance", res.witness->distance},
                          {"separation", res.witness->separation}};
      }
      emit(doc.dump(2) + "\n");
    } else if (res.accessible) {
      emit(r0.to_string() + " accessible, eccentricity " + std::to_string(res.eccentricity) + "\n");
    } else {
      emit(r0.to_string() + " not accessible: " + res.witness->word.to_string() + " at distance " +
           std::to_string(res.witness->distance) + " with separation " + std::to_string(res.witness->separation) +
           "\n");
    }
    if (canonical_source && !res.accessible) {
      err_ << "error: the flag-incident word " << r0.to_string() << " of " << w.to_string()
           << " is not L2-accessible; this contradicts the accessibility theorem\n";
      return kInvariantFailure;
    }
    return kOk;
  }

  int flats() {
    check_format({"text", "json"});
    auto sp = spec();
    std::vector<Rank2Flat> list = s_.element.empty() ? enumerate_flats(sp) : l2_of(element());
    if (s_.format == "json") {
      json doc = {{"spec", spec_json(sp)}, {"count", list.size()}};
      if (!s_.element.empty()) doc["element"] = element().to_string();
      auto& arr = doc["flats"] = json::array();
      for (const auto& f : list) {
        json members = json::array();
        for (const auto& h : f.members) members.push_back(h.name());
        arr.push_back({{"name", f.name()}, {"members", members}});
      }
      emit(doc.dump(2) + "\n");
    } else {
      std::string text;
      for (const auto& f : list) {
        text += f.name() + ":";
        for (const auto& h : f.members) text += " " + h.name();
        text += "\n";
      }
      text += std::to_string(list.size()) + " flats\n";
      emit(text);
    }
    return kOk;
  }

  int formulas() {
    check_format({"text", "json"});
    std::vector<std::pair<RootFamily, std::optional<int>>> rows;
    if (!s_.family.empty()) {
      auto fam = parse_root_family(s_.family);
      rows.emplace_back(fam, takes_parameter(fam) ? std::optional<int>(s_.param) : std::nullopt);
    } else {
      int n = s_.n > 0 ? s_.n : 4;
      for (auto fam : {RootFamily::A, RootFamily::B, RootFamily::D}) rows.emplace_back(fam, n);
      for (auto fam : {RootFamily::E6, RootFamily::E7, RootFamily::E8, RootFamily::F4, RootFamily::H3, RootFamily::H4})
        rows.emplace_back(fam, std::nullopt);
      rows.emplace_back(RootFamily::I2, 5);
    }
    json doc = json::array();
    std::ostringstream text;
    for (const auto& [fam, p] : rows) {
      auto closed = l2_closed_form(fam, p);
      bool geometric = fam == RootFamily::A || fam == RootFamily::B || fam == RootFamily::D;
      std::optional<std::int64_t> geo;
      if (geometric) geo = count_flats_by_geometry(fam, *p);
      json row = {{"family", to_string(fam)}, {"l2", closed}};
      if (p) row["parameter"] = *p;
      if (geo) row["geometric"] = *geo;
      doc.push_back(row);
      text << to_string(fam) << (p ? "(" + std::to_string(*p) + ")" : "") << " |L2| = " << closed;
      if (geo) text << " (geometric count " << *geo << ")";
      text << "\n";
      if (geo && *geo != closed) {
        emit(s_.format == "json" ? doc.dump(2) + "\n" : text.str());
        err_ << "error: geometric flat count " << *geo << " differs from closed form " << closed << " for "
             << to_string(fam) << "(" << *p << ")\n";
        return kInvariantFailure;
      }
    }
    emit(s_.format == "json" ? doc.dump(2) + "\n" : text.str());
    return kOk;
  }

  int conjecture() {
    check_format({"text", "json"});
    ConjectureOptions options;
    options.vertex_budget = s_.budget;
    options.workers = s_.workers;
    options.progress = [this](std::size_t done, std::size_t total) {
      if (done % 16 == 0 || done == total) err_ << "\r" << done << "/" << total << " elements" << std::flush;
      if (done == total) err_ << "\n";
    };
    auto report = conjecture_check(spec(), options);
    emit(s_.format == "json" ? to_json_lines(report) : to_text(report));
    for (const auto& row : report.rows) {
      if (!row.within_twice_l2) {
        err_ << "error: diameter " << row.diameter << " of G(" << row.w.to_string()
             << ") exceeds twice |L2(w)|, violating the accessibility upper bound\n";
        return kInvariantFailure;
      }
    }
    return kOk;
  }

 private:
  const Settings& s_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Reduced-word graphs of Coxeter groups of types A and B"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  try {
    if (auto v = env_u64("RWGRAPH_BUDGET")) s.budget = *v;
    if (auto v = env_u64("RWGRAPH_SEED")) s.seed = *v;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }

  auto common = [&](CLI::App* sub, bool element_required) {
    sub->add_option("--type,-t", s.type, "Coxeter type: A or B");
    sub->add_option("--n,-n", s.n, "rank parameter: S_n for A, B_n for B");
    sub->add_option("--element,-e", s.element,
                    element_required ? "element in one-line notation (3412, -3,-2,-1) or w0"
                                     : "optional element in one-line notation or w0");
    sub->add_option("type_pos", s.type, "type (positional form)");
    sub->add_option("n_pos", s.n, "rank (positional form)");
    sub->add_option("element_pos", s.element, "element (positional form)");
    sub->add_option("--format,-f", s.format, "output format: text, json or dot");
    sub->add_option("--output,-o", s.output, "write results to this file instead of stdout");
    sub->add_option("--budget", s.budget, "vertex budget for word enumeration (env RWGRAPH_BUDGET)");
    sub->add_option("--workers", s.workers, "worker threads (0 = all cores)");
    sub->add_option("--seed", s.seed, "seed for randomized sampling (env RWGRAPH_SEED)");
    sub->add_option("--exhaustive-threshold", s.exhaustive_threshold,
                    "largest vertex count for all-pairs BFS diameter");
  };

  std::string chosen;
  auto add = [&](const char* name, const char* help, bool element_required) {
    auto* sub = app.add_subcommand(name, help);
    common(sub, element_required);
    sub->callback([&chosen, name] { chosen = name; });
    return sub;
  };
  add("words", "list the reduced words of an element", true);
  add("graph", "build G(w) and print it as text, JSON or DOT", true)
      ->add_flag("--diameter", s.with_diameter, "include the diameter in the output");
  add("distance", "BFS distances and separation gaps from a source word", true)
      ->add_option("--source,-s", s.source, "source word (default: the canonical word)");
  add("diameter", "diameter of G(w)", true)->add_option("--mode,-m", s.mode, "exact or theorem");
  add("canonical", "flag-incident canonical word of an element", true)
      ->add_flag("--crossings", s.crossings, "also print the crossing sequence");
  auto* acc = add("accessible", "L2-accessibility of a source word", true);
  acc->add_option("--source,-s", s.source, "source word (default: the canonical word)");
  acc->add_flag("--all-sources", s.all_sources, "list every word that is not accessible");
  add("flats", "rank-two flats, or L2(w) when an element is given", false);
  auto* fm = add("formulas", "closed-form |L2| values with geometric cross-check", false);
  fm->add_option("--family", s.family, "A, B, D, E6, E7, E8, F4, H3, H4 or I2");
  fm->add_option("--param", s.param, "n for A/B/D, m for I2");
  add("conjecture", "check the diameter bounds for every element of the group", false);

  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }

  Command cmd(s, out, err);
  static const std::map<std::string, int (Command::*)()> dispatch = {
      {"words", &Command::words},           {"graph", &Command::graph},
      {"distance", &Command::distance},     {"diameter", &Command::diameter_cmd},
      {"canonical", &Command::canonical},   {"accessible", &Command::accessible},
      {"flats", &Command::flats},           {"formulas", &Command::formulas},
      {"conjecture", &Command::conjecture}};
  try {
    return (cmd.*dispatch.at(chosen))();
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << " (raise it with --budget)\n";
    return kBudgetExceeded;
  } catch (const InvariantViolation& e) {
    err << "error: invariant violated: " << e.what() << "\n";
    return kInvariantFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
}

}  // namespace rwg::cli
