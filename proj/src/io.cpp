#include "urlab/io.hpp"

#include <fstream>
#include <sstream>

#include "urlab/errors.hpp"

namespace urlab::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw SchemaError(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

std::size_t count_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    throw SchemaError(std::string(what) + " must be a non-negative integer");
  }
  return j.get<std::size_t>();
}

void check_schema(const Json& j) {
  if (j.is_object() && j.contains("schema") && j.at("schema") != kSchema) {
    throw SchemaError("unsupported schema " + j.at("schema").dump());
  }
}

}  // namespace

Json to_json(const Rational& q) { return q.str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) {
    return Rational(j.get<long long>());
  }
  if (!j.is_string()) {
    throw SchemaError("rational must be a \"p/q\" string");
  }
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    throw SchemaError(std::string("bad rational: ") + e.what());
  }
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) {
      row.push_back(to_json(m(i, k)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || !j.front().is_array() || j.front().empty()) {
    throw SchemaError("matrix must be a non-empty array of non-empty rows");
  }
  const std::size_t cols = j.front().size();
  Matrix m(j.size(), cols);
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != cols) {
      throw SchemaError("matrix rows have different lengths");
    }
    for (std::size_t k = 0; k < cols; ++k) {
      m(i, k) = rational_from_json(j[i][k]);
    }
  }
  return m;
}

Json to_json(const AlgebraSpec& spec) {
  Json j;
  switch (spec.kind) {
    case AlgebraKind::single:
      j["kind"] = "single";
      break;
    case AlgebraKind::two_blocks:
      j["kind"] = "two_blocks";
      j["m"] = spec.m;
      j["mu"] = to_json(spec.mu);
      break;
    case AlgebraKind::diagonal:
      j["kind"] = "diagonal";
      j["exponents"] = spec.exponents;
      break;
  }
  j["n"] = spec.n;
  j["lambda"] = to_json(spec.lambda);
  return j;
}

AlgebraSpec algebra_spec_from_json(const Json& j) {
  AlgebraSpec spec;
  const std::string kind = field(j, "kind").is_string() ? j.at("kind").get<std::string>() : "";
  spec.lambda = rational_from_json(field(j, "lambda"));
  if (kind == "single") {
    spec.kind = AlgebraKind::single;
    spec.n = count_from_json(field(j, "n"), "n");
  } else if (kind == "two_blocks") {
    spec.kind = AlgebraKind::two_blocks;
    spec.n = count_from_json(field(j, "n"), "n");
    spec.m = count_from_json(field(j, "m"), "m");
    spec.mu = rational_from_json(field(j, "mu"));
  } else if (kind == "diagonal") {
    spec.kind = AlgebraKind::diagonal;
    const Json& e = field(j, "exponents");
    if (!e.is_array()) {
      throw SchemaError("exponents must be an array");
    }
    for (const auto& k : e) {
      spec.exponents.push_back(count_from_json(k, "exponent"));
    }
    spec.n = spec.exponents.size();
  } else {
    throw SchemaError("kind must be single, two_blocks or diagonal");
  }
  return spec;
}

Json to_json(const RepParams& p) {
  return Json{{"n", p.n},
              {"lambda", to_json(p.lambda)},
              {"alpha", to_json(p.alpha)},
              {"abc", {p.a, p.b, p.c}},
              {"M", to_json(p.M)},
              {"N", to_json(p.N)}};
}

RepParams params_from_json(const Json& j) {
  RepParams p;
  p.n = count_from_json(field(j, "n"), "n");
  p.lambda = rational_from_json(field(j, "lambda"));
  p.alpha = rational_from_json(field(j, "alpha"));
  const Json& abc = field(j, "abc");
  if (!abc.is_array() || abc.size() != 3) {
    throw SchemaError("abc must be [a, b, c]");
  }
  p.a = count_from_json(abc[0], "a");
  p.b = count_from_json(abc[1], "b");
  p.c = count_from_json(abc[2], "c");
  p.M = matrix_from_json(field(j, "M"));
  p.N = matrix_from_json(field(j, "N"));
  p.validate();
  return p;
}

Json to_json(const Representation& rep) {
  const GAlgebra& alg = *rep.algebra;
  Json j{{"schema", kSchema}, {"algebra", to_json(alg.spec())}, {"verified", rep.verified}};
  if (rep.params) {
    j["params"] = to_json(*rep.params);
  }
  if (rep.partition) {
    j["partition"] = rep.partition->sizes();
  }
  if (rep.alpha) {
    j["alpha"] = to_json(*rep.alpha);
  }
  Json images = Json::object();
  for (std::size_t i = 0; i < rep.images.size(); ++i) {
    images[alg.name(i)] = to_json(rep.images[i]);
  }
  j["images"] = std::move(images);
  return j;
}

Representation representation_from_json(const Json& j) {
  check_schema(j);
  if (j.contains("params")) {
    Representation rep = build_R(params_from_json(j.at("params")));
    if (j.contains("images")) {
      const Json& images = j.at("images");
      if (!images.is_object()) {
        throw SchemaError("images must be an object keyed by basis name");
      }
      for (const auto& [name, value] : images.items()) {
        const auto idx = rep.algebra->find_name(name);
        if (!idx) {
          throw SchemaError("unknown basis element \"" + name + "\"");
        }
        if (matrix_from_json(value) != rep.image(*idx)) {
          throw SchemaError("image of " + name + " disagrees with the one built from params");
        }
      }
    }
    return rep;
  }
  auto alg = std::make_shared<const GAlgebra>(build_g_variant(algebra_spec_from_json(field(j, "algebra"))));
  const Json& images = field(j, "images");
  if (!images.is_object()) {
    throw SchemaError("images must be an object keyed by basis name");
  }
  std::vector<std::optional<Matrix>> found(alg->dim());
  for (const auto& [name, value] : images.items()) {
    const auto idx = alg->find_name(name);
    if (!idx) {
      throw SchemaError("unknown basis element \"" + name + "\"");
    }
    found[*idx] = matrix_from_json(value);
  }
  std::vector<Matrix> mats;
  std::size_t d = 0;
  for (const auto& m : found) {
    if (m) {
      d = m->rows();
      break;
    }
  }
  if (d == 0) {
    throw SchemaError("no images given");
  }
  for (std::size_t i = 0; i < found.size(); ++i) {
    if (!found[i]) {
      // Missing wedges are determined by the generators.
      if (alg->label(i).tag != BasisLabel::Tag::w) {
        throw SchemaError("missing image of " + alg->name(i));
      }
    } else if (found[i]->rows() != d || found[i]->cols() != d) {
      throw SchemaError("image of " + alg->name(i) + " has the wrong size");
    }
  }
  std::vector<Matrix> gens;
  for (std::size_t k = 0; k < alg->gen_count(); ++k) {
    gens.push_back(*found[alg->v_index(k)]);
  }
  std::vector<Matrix> wedges;
  if (std::any_of(found.begin(), found.end(), [](const auto& m) { return !m; })) {
    wedges = extend_from_V(*alg, gens);
  }
  mats.push_back(*found[alg->x_index()]);
  for (auto& g : gens) {
    mats.push_back(std::move(g));
  }
  for (std::size_t i = 1 + alg->gen_count(); i < alg->dim(); ++i) {
    mats.push_back(found[i] ? *found[i] : wedges[i - 1 - alg->gen_count()]);
  }
  Representation rep = make_representation(alg, std::move(mats));
  if (j.contains("partition") && j.contains("alpha")) {
    std::vector<std::size_t> sizes;
    for (const auto& s : j.at("partition")) {
      sizes.push_back(count_from_json(s, "partition size"));
    }
    BlockPartition part(sizes);
    if (part.total() != d) {
      throw SchemaError("partition does not add up to the dimension");
    }
    rep.partition = part;
    rep.alpha = rational_from_json(j.at("alpha"));
  }
  return rep;
}

Json to_json(const AnalysisReport& r, const GAlgebra& alg) {
  Json kernel = Json::array();
  for (const auto& e : r.kernel_basis) {
    Json terms = Json::object();
    for (std::size_t i = 0; i < e.coords.size(); ++i) {
      if (!e.coords[i].is_zero()) {
        terms[alg.name(i)] = to_json(e.coords[i]);
      }
    }
    kernel.push_back(std::move(terms));
  }
  Json j{{"schema", kSchema},
         {"length", r.length},
         {"length_layers", r.length_layers},
         {"uniserial", r.uniserial},
         {"socle_layers", r.socle_layers},
         {"faithful", r.faithful},
         {"relatively_faithful", r.relatively_faithful},
         {"kernel_dim", r.kernel_basis.size()},
         {"kernel_basis", std::move(kernel)},
         {"kernel_meets_v_dim", r.kernel_meets_v_dim},
         {"wedges_in_kernel", r.wedges_in_kernel},
         {"negative_certified", r.negative_certified}};
  if (r.funk_predicate) {
    j["adjacent_sum_predicate"] = *r.funk_predicate;
    j["adjacent_sum_consistent"] = *r.funk_consistent;
  }
  return j;
}

Json to_json(const SweepReport& r) {
  Json records = Json::array();
  for (const auto& rec : r.records) {
    records.push_back({{"n", rec.n},
                       {"key", rec.key},
                       {"expected", rec.expected},
                       {"observed", rec.observed},
                       {"samples", rec.samples},
                       {"pass", rec.pass}});
  }
  Json ces = Json::array();
  for (const auto& c : r.counterexamples) {
    ces.push_back({{"fingerprint", c.fingerprint}, {"detail", c.detail}});
  }
  Json stats = Json::object();
  for (const auto& [k, v] : r.stats) {
    stats[k] = v;
  }
  return Json{{"schema", kSchema},     {"kind", r.kind},     {"label", r.label},      {"key", r.key_header},
              {"records", records},    {"pass", r.pass()},   {"counterexamples", ces}, {"stats", stats}};
}

Json to_json(const IsomorphismResult& r) {
  Json j{{"schema", kSchema},
         {"isomorphic", r.intertwiner.has_value()},
         {"solution_dim", r.solution_dim},
         {"certified_negative", r.certified_negative},
         {"attempts", r.attempts}};
  if (r.intertwiner) {
    j["intertwiner"] = to_json(*r.intertwiner);
  }
  return j;
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw SchemaError("cannot read " + path);
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

}  // namespace urlab::io
