#include "io.hpp"

#include <fstream>
#include <map>
#include <regex>
#include <sstream>

#include "rigidify/errors.hpp"
#include "rigidify/oracles.hpp"

namespace rigidify::cli {

OrderedComplex Loaded::ordered() const {
  if (auto const* o = std::get_if<OrderedComplex>(&complex)) {
    return *o;
  }
  return OrderedComplex::from_complex(get());
}

namespace {

std::vector<std::string> split(std::string const& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

int parse_int(std::string const& text) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (std::exception const&) {
    throw InvalidInput("not an integer: '" + text + "'");
  }
  if (used != text.size()) {
    throw InvalidInput("not an integer: '" + text + "'");
  }
  return value;
}

Loaded single_fixture(std::string const& spec) {
  auto const parts = split(spec, ':');
  std::vector<int> params;
  for (std::size_t k = 1; k < parts.size(); ++k) {
    params.push_back(parse_int(parts[k]));
  }
  return Loaded{spec, standard(parts[0], params)};
}

}  // namespace

Loaded load_fixture(std::string const& spec) {
  auto const factors = split(spec, '*');
  if (factors.size() == 1) {
    return single_fixture(spec);
  }
  OrderedComplex acc = single_fixture(factors[0]).ordered();
  for (std::size_t k = 1; k < factors.size(); ++k) {
    acc = product(acc, single_fixture(factors[k]).ordered());
  }
  return Loaded{spec, std::move(acc)};
}

namespace {

struct KeyText {
  std::string label;
  DegeneracyWord word;
};

KeyText split_key(std::string const& text) {
  static std::regex const degenerate(R"(^((?:s[0-9]+)+)\((.+)\)$)");
  static std::regex const index(R"(s([0-9]+))");
  std::smatch m;
  if (!std::regex_match(text, m, degenerate)) {
    return KeyText{text, {}};
  }
  std::vector<int> word;
  std::string const ops = m[1].str();
  for (auto it = std::sregex_iterator(ops.begin(), ops.end(), index);
       it != std::sregex_iterator(); ++it) {
    word.push_back(parse_int((*it)[1].str()));
  }
  return KeyText{m[2].str(), DegeneracyWord::from_indices(word)};
}

SimplexKey over(int base_dim, std::size_t gen, DegeneracyWord word) {
  int const dim = base_dim + static_cast<int>(word.length());
  return SimplexKey{dim, gen, std::move(word)};
}

}  // namespace

SimplexKey parse_key(GeneratedComplex const& c, std::string const& text) {
  auto k = split_key(text);
  auto base = c.find_label(k.label);
  if (!base) {
    throw InvalidInput("unknown generator '" + k.label + "'");
  }
  return over(base->dim, base->gen, std::move(k.word));
}

std::string key_string(Complex const& c, SimplexKey const& key) {
  std::string const label = c.generator_label(key.generator_dim(), key.gen);
  if (!key.is_degenerate()) {
    return label;
  }
  return key.word.to_string() + "(" + label + ")";
}

namespace {

// Label -> (dim, gen) for a complex still being built.
using LabelTable = std::map<std::string, std::pair<int, std::size_t>>;

SimplexKey lookup(LabelTable const& labels, std::string const& text) {
  auto k = split_key(text);
  auto it = labels.find(k.label);
  if (it == labels.end()) {
    throw InvalidInput("unknown generator '" + k.label + "'");
  }
  return over(it->second.first, it->second.second, std::move(k.word));
}

}  // namespace

Loaded load_json(Json const& doc, std::string name) {
  try {
    if (!doc.is_object() || doc.size() != 1) {
      throw InvalidInput("expected an object with a single key 'ordered' or 'generated'");
    }
    if (doc.contains("ordered")) {
      auto const& body = doc.at("ordered");
      auto chains = body.at("maximal_chains").get<std::vector<std::vector<VertexId>>>();
      std::size_t const count = body.value("vertex_count", std::size_t{0});
      return Loaded{std::move(name), OrderedComplex::from_maximal_chains(chains, count)};
    }
    if (doc.contains("generated")) {
      auto const& body = doc.at("generated");
      GeneratedComplex::Builder builder;
      LabelTable labels;
      std::map<int, std::vector<std::string>> by_dim;
      for (auto const& [dim_text, list] : body.at("generators").items()) {
        int const dim = parse_int(dim_text);
        if (dim < 0) {
          throw InvalidInput("negative dimension");
        }
        by_dim[dim] = list.get<std::vector<std::string>>();
      }
      for (auto const& [dim, list] : by_dim) {
        for (auto const& label : list) {
          if (labels.count(label)) {
            throw InvalidInput("duplicate generator label '" + label + "'");
          }
          std::size_t const g = builder.add_generator(dim, label);
          labels.emplace(label, std::make_pair(dim, g));
        }
      }
      Json const faces = body.value("faces", Json::object());
      for (auto const& [label, list] : faces.items()) {
        auto it = labels.find(label);
        if (it == labels.end()) {
          throw InvalidInput("faces given for unknown generator '" + label + "'");
        }
        for (auto const& entry : list) {
          if (!entry.is_array() || entry.size() != 3 || entry[0] != "d") {
            throw InvalidInput("face entries look like [\"d\", i, key]");
          }
          builder.set_face(it->second.first, it->second.second, entry[1].get<int>(),
                           lookup(labels, entry[2].get<std::string>()));
        }
      }
      return Loaded{std::move(name), std::move(builder).build()};
    }
    throw InvalidInput("expected 'ordered' or 'generated'");
  } catch (Json::exception const& e) {
    throw InvalidInput(std::string("malformed complex: ") + e.what());
  } catch (ContractViolation const& e) {
    throw InvalidInput(std::string("malformed complex: ") + e.what());
  }
}

Loaded load_file(std::filesystem::path const& path) {
  std::ifstream in(path);
  if (!in) {
    throw InvalidInput("cannot read " + path.string());
  }
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (Json::exception const& e) {
    throw InvalidInput("invalid JSON in " + path.string() + ": " + e.what());
  }
  return load_json(doc, path.filename().string());
}

std::string describe_not_ordered(Complex const& c) {
  auto const v = is_ordered(c);
  std::string out = v.reason;
  if (v.clash) {
    out += "; witness " + key_string(c, v.clash->first) + " and " + key_string(c, v.clash->second);
  }
  return out;
}

namespace {

Json simplex_json(MappingSimplex const& m) {
  Json flag = Json::array();
  for (auto const& entry : m.flag()) {
    flag.push_back(entry.elements());
  }
  Json out;
  out["beads"] = m.necklace().beads();
  out["vertices"] = m.map().vertices;
  out["flag"] = std::move(flag);
  return out;
}

}  // namespace

Json mapping_space_report(std::string const& name, MappingSpace const& space) {
  Json out;
  out["command"] = "mapping-space";
  out["complex"] = name;
  out["from"] = space.from;
  out["to"] = space.to;
  out["truncated"] = space.truncated;
  out["f_vector"] = space.f_vector();
  Json dims = Json::array();
  for (std::size_t d = 0; d < space.simplices.size(); ++d) {
    Json level;
    level["dim"] = d;
    Json items = Json::array();
    for (auto const& m : space.simplices[d]) {
      items.push_back(simplex_json(m));
    }
    level["simplices"] = std::move(items);
    if (d > 0) {
      Json faces = Json::array();
      for (std::size_t g = 0; g < space.simplices[d].size(); ++g) {
        Json row = Json::array();
        for (int i = 0; i <= static_cast<int>(d); ++i) {
          auto const f = space.complex.generator_face(static_cast<int>(d), g, i);
          if (f.is_degenerate()) {
            row.push_back(f.word.to_string() + "(" + std::to_string(f.gen) + ")");
          } else {
            row.push_back(f.gen);
          }
        }
        faces.push_back(std::move(row));
      }
      level["faces"] = std::move(faces);
    }
    dims.push_back(std::move(level));
  }
  out["dimensions"] = std::move(dims);
  return out;
}

Json homology_report(std::string const& name, std::string const& target,
                     Complex const& c, int dmax) {
  auto const h = homology(c, dmax);
  auto const comps = pi0(c);
  Json out;
  out["command"] = "homology";
  out["complex"] = name;
  out["target"] = target;
  out["f_vector"] = c.f_vector();
  Json groups = Json::array();
  std::vector<std::size_t> betti;
  for (auto const& g : h.groups) {
    Json entry;
    entry["dim"] = g.dim;
    entry["betti"] = g.betti;
    entry["torsion"] = g.torsion;
    groups.push_back(std::move(entry));
    betti.push_back(g.betti);
  }
  out["groups"] = std::move(groups);
  out["betti"] = betti;
  out["components"] = comps.count;
  out["homology_point"] = c.vertex_count() > 0 && comps.count == 1 && h.is_point();
  out["caveat"] = "homology point is a proxy for contractibility; the fundamental group is not checked";
  return out;
}

Json categorify_report(std::string const& name, SimplicialCategory const& cat,
                       std::optional<CoherentNerve> const& nerve,
                       std::optional<HornReport> const& horns) {
  Json out;
  out["command"] = "categorify";
  out["complex"] = name;
  std::size_t const n = cat.object_count();
  out["objects"] = n;
  Json homs = Json::array();
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = 0; b < n; ++b) {
      auto const& h = cat.hom(a, b);
      if (h.empty()) {
        continue;
      }
      Json entry;
      entry["from"] = a;
      entry["to"] = b;
      entry["f_vector"] = h.f_vector();
      homs.push_back(std::move(entry));
    }
  }
  out["homs"] = std::move(homs);
  Json table = Json::array();
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = 0; b < n; ++b) {
      for (VertexId c = 0; c < n; ++c) {
        auto const& fs = cat.hom(a, b).simplices;
        auto const& gs = cat.hom(b, c).simplices;
        std::size_t const top = std::min(fs.size(), gs.size());
        for (std::size_t d = 0; d < top; ++d) {
          Json rows = Json::array();
          for (std::size_t g = 0; g < gs[d].size(); ++g) {
            std::vector<std::size_t> row;
            for (std::size_t f = 0; f < fs[d].size(); ++f) {
              row.push_back(cat.composition(a, b, c, static_cast<int>(d), g, f));
            }
            rows.push_back(row);
          }
          Json entry;
          entry["objects"] = {a, b, c};
          entry["dim"] = d;
          entry["table"] = std::move(rows);
          table.push_back(std::move(entry));
        }
      }
    }
  }
  out["composition"] = std::move(table);
  if (nerve) {
    Json nv;
    nv["nmax"] = nerve->nmax;
    nv["counts"] = nerve->counts();
    if (horns) {
      nv["horn_dmax"] = horns->dmax;
      nv["horns_checked"] = horns->horns_checked;
      nv["horn_failures"] = horns->failure_count;
    }
    out["coherent_nerve"] = std::move(nv);
  }
  return out;
}

Json oracle_report(int n, int levels, bool& all_equal) {
  all_equal = true;
  Json out;
  out["command"] = "oracle";
  out["n"] = n;
  out["levels"] = levels;
  Json rows = Json::array();
  for (int level = 0; level <= levels; ++level) {
    for (std::size_t i = 0; i <= static_cast<std::size_t>(n); ++i) {
      for (std::size_t j = i; j <= static_cast<std::size_t>(n); ++j) {
        auto const lc = comonad_level(n, level, i, j);
        int const m = static_cast<int>(j - i) - 1;
        std::uint64_t const formula = i == j ? 1 : chain_count(m, level);
        std::uint64_t const brute = i == j ? 1 : oracle::weak_chain_count(m, level);
        bool const equal = lc.count == formula && formula == brute;
        all_equal = all_equal && equal;
        Json row;
        row["level"] = level;
        row["i"] = i;
        row["j"] = j;
        row["comonad"] = lc.count;
        row["chain_count"] = formula;
        row["brute_force"] = brute;
        row["equal"] = equal;
        rows.push_back(std::move(row));
      }
    }
  }
  out["rows"] = std::move(rows);
  out["all_equal"] = all_equal;
  return out;
}

namespace {

std::string list(Json const& v) {
  std::string out = "[";
  bool first = true;
  for (auto const& x : v) {
    out += (first ? "" : ",") + (x.is_string() ? x.get<std::string>() : x.dump());
    first = false;
  }
  return out + "]";
}

}  // namespace

std::string render_table(Json const& report) {
  std::ostringstream os;
  std::string const cmd = report.at("command").get<std::string>();
  if (cmd == "mapping-space") {
    os << "mapping space " << report["complex"].get<std::string>() << " (" << report["from"]
       << "," << report["to"] << ")" << (report["truncated"].get<bool>() ? " truncated" : "")
       << "\nf-vector " << list(report["f_vector"]) << "\n";
    for (auto const& level : report["dimensions"]) {
      os << "dim " << level["dim"] << "\n";
      std::size_t g = 0;
      for (auto const& s : level["simplices"]) {
        os << "  " << g << "  beads " << list(s["beads"]) << "  vertices "
           << list(s["vertices"]) << "  flag";
        for (auto const& e : s["flag"]) {
          os << " " << list(e);
        }
        if (level.contains("faces")) {
          os << "  faces " << list(level["faces"][g]);
        }
        os << "\n";
        ++g;
      }
    }
  } else if (cmd == "homology") {
    os << "homology of " << report["target"].get<std::string>() << " in "
       << report["complex"].get<std::string>() << "\n";
    os << "dim  betti  torsion\n";
    for (auto const& g : report["groups"]) {
      os << g["dim"] << "    " << g["betti"] << "      " << list(g["torsion"]) << "\n";
    }
    os << "components " << report["components"] << ", homology point "
       << (report["homology_point"].get<bool>() ? "yes" : "no") << "\n"
       << report["caveat"].get<std::string>() << "\n";
  } else if (cmd == "categorify") {
    os << "categorify " << report["complex"].get<std::string>() << ": " << report["objects"]
       << " objects\n";
    for (auto const& h : report["homs"]) {
      os << "  hom(" << h["from"] << "," << h["to"] << ") f-vector " << list(h["f_vector"])
         << "\n";
    }
    for (auto const& c : report["composition"]) {
      os << "  compose " << list(c["objects"]) << " dim " << c["dim"] << ":";
      for (auto const& row : c["table"]) {
        os << " " << list(row);
      }
      os << "\n";
    }
    if (report.contains("coherent_nerve")) {
      auto const& nv = report["coherent_nerve"];
      os << "coherent nerve levels " << list(nv["counts"]);
      if (nv.contains("horn_failures")) {
        os << ", " << nv["horns_checked"] << " inner horns, " << nv["horn_failures"]
           << " unfillable";
      }
      os << "\n";
    }
  } else if (cmd == "oracle") {
    os << "level  i  j  comonad  chain_count  brute  equal\n";
    for (auto const& r : report["rows"]) {
      os << r["level"] << "      " << r["i"] << "  " << r["j"] << "  " << r["comonad"]
         << "        " << r["chain_count"] << "            " << r["brute_force"] << "      "
         << (r["equal"].get<bool>() ? "yes" : "NO") << "\n";
    }
  } else if (cmd == "verify") {
    for (auto const& r : report["checks"]) {
      os << r["line"].get<std::string>() << "\n";
    }
    os << report["passed"] << " of " << report["total"] << " checks passed\n";
  } else {
    os << report.dump(2) << "\n";
  }
  return os.str();
}

}  // namespace rigidify::cli
