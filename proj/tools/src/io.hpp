#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rigidify/category.hpp"
#include "rigidify/comonad.hpp"
#include "rigidify/fixtures.hpp"
#include "rigidify/homology.hpp"
#include "rigidify/horn.hpp"
#include "rigidify/nerve.hpp"

namespace rigidify::cli {

using Json = nlohmann::ordered_json;

enum class Format { json, table };

struct RunConfig {
  std::string command;
  std::optional<std::string> fixture;
  std::optional<std::filesystem::path> input;
  std::optional<VertexId> from;
  std::optional<VertexId> to;
  std::optional<std::size_t> bound;
  std::optional<int> nmax;
  std::optional<int> dmax;
  std::optional<std::string> only;
  int n = 3;
  int levels = 2;
  Format format = Format::json;
  std::optional<std::filesystem::path> output;
};

struct Loaded {
  std::string name;
  AnyComplex complex;

  Complex const& get() const { return as_complex(complex); }
  // Throws NotOrdered with a witness.
  OrderedComplex ordered() const;
};

// "simplex:3", "horn:3:1", "two_triangles", "simplex:1*simplex:1".
Loaded load_fixture(std::string const& spec);

// {"ordered":{"maximal_chains":[...],"vertex_count":n}} or
// {"generated":{"generators":{"0":[labels],...},"faces":{label:[["d",i,key],...]}}}
Loaded load_json(Json const& doc, std::string name);
Loaded load_file(std::filesystem::path const& path);

// "v", "e" or "s1s0(v)" using generator labels.
std::string key_string(Complex const& c, SimplexKey const& key);
SimplexKey parse_key(GeneratedComplex const& c, std::string const& text);

std::string describe_not_ordered(Complex const& c);

Json mapping_space_report(std::string const& name, MappingSpace const& space);
Json homology_report(std::string const& name, std::string const& target,
                     Complex const& c, int dmax);
Json categorify_report(std::string const& name, SimplicialCategory const& cat,
                       std::optional<CoherentNerve> const& nerve,
                       std::optional<HornReport> const& horns);
Json oracle_report(int n, int levels, bool& all_equal);

// Human readable rendering of any of the reports above.
std::string render_table(Json const& report);

}  // namespace rigidify::cli
