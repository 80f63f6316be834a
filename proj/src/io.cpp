#include "wqh/io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

namespace wqh {

namespace {

// Runs a parser and turns json library exceptions into InputError.
template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string(what) + ": " + e.what());
  }
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw InputError(msg);
}

int label_index(const Json& j, int rank, const char* what) {
  int v = j.get<int>();
  require(v >= 0 && v < rank, std::string(what) + ": label index out of range");
  return v;
}

Json channels_to_json(const std::vector<FChannel>& ch) {
  Json out = Json::array();
  for (const auto& c : ch) out.push_back({c.label, c.inner, c.outer});
  return out;
}

Json family_to_json(const Family& f) {
  Json blocks = Json::array();
  for (const auto& [labels, m] : f.blocks) blocks.push_back({{"labels", labels}, {"matrix", matrix_to_json(m)}});
  return {{"degree", f.degree}, {"blocks", blocks}};
}

long block_size(const std::vector<long>& D, const std::vector<int>& labels) {
  long s = 1;
  for (int a : labels) s *= D[a];
  return s;
}

Family family_from_json(const Json& j, const std::vector<long>& D, int degree, const char* what) {
  Family f;
  f.degree = j.at("degree").get<int>();
  require(f.degree == degree, std::string(what) + ": wrong degree");
  const int rank = static_cast<int>(D.size());
  for (const auto& b : j.at("blocks")) {
    std::vector<int> labels;
    for (const auto& l : b.at("labels")) labels.push_back(label_index(l, rank, what));
    require(static_cast<int>(labels.size()) == degree, std::string(what) + ": label tuple of wrong length");
    Matrix m = matrix_from_json(b.at("matrix"));
    long n = block_size(D, labels);
    require(static_cast<long>(m.rows()) == n && static_cast<long>(m.cols()) == n,
            std::string(what) + ": block shape does not match D");
    f.blocks[labels] = std::move(m);
  }
  require(f.blocks.size() == label_tuples(rank, degree).size(), std::string(what) + ": missing blocks");
  return f;
}

Json pair_map_to_json(const std::map<std::pair<int, int>, Matrix>& m) {
  Json out = Json::array();
  for (const auto& [k, v] : m) out.push_back({{"labels", {k.first, k.second}}, {"matrix", matrix_to_json(v)}});
  return out;
}

std::map<std::pair<int, int>, Matrix> pair_map_from_json(const Json& j, int rank) {
  std::map<std::pair<int, int>, Matrix> out;
  for (const auto& e : j) {
    const auto& l = e.at("labels");
    require(l.size() == 2, "functor: tensorator labels must be pairs");
    out[{label_index(l[0], rank, "functor"), label_index(l[1], rank, "functor")}] = matrix_from_json(e.at("matrix"));
  }
  return out;
}

}  // namespace

Json scalar_to_json(const Scalar& s) {
  if (!s.is_exact()) {
    auto z = s.to_complex();
    return {{"re", z.real()}, {"im", z.imag()}};
  }
  Json coeffs = Json::array();
  for (const auto& q : s.coeffs()) coeffs.push_back(q.get_str());
  return {{"conductor", s.conductor()}, {"coeffs", coeffs}};
}

Scalar scalar_from_json(const Json& j) {
  return guarded("scalar", [&] {
    if (j.is_number_integer()) return Scalar(j.get<long>());
    if (j.contains("re")) return Scalar::approx(j.at("re").get<double>(), j.value("im", 0.0));
    long n = j.at("conductor").get<long>();
    require(n >= 1, "scalar: conductor must be positive");
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) {
      Rational q;
      if (c.is_number_integer()) {
        q = Rational(c.get<long>());
      } else {
        require(q.set_str(c.get<std::string>(), 10) == 0, "scalar: bad rational '" + c.get<std::string>() + "'");
        require(q.get_den() != 0, "scalar: zero denominator");
        q.canonicalize();
      }
      coeffs.push_back(q);
    }
    return make_scalar(n, coeffs);
  });
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(scalar_to_json(m(i, k)));
    rows.push_back(row);
  }
  return rows;
}

Matrix matrix_from_json(const Json& j) {
  return guarded("matrix", [&] {
    require(j.is_array(), "matrix: expected an array of rows");
    std::vector<std::vector<Scalar>> rows;
    for (const auto& r : j) {
      require(r.is_array(), "matrix: expected an array of rows");
      std::vector<Scalar> row;
      for (const auto& e : r) row.push_back(scalar_from_json(e));
      require(rows.empty() || row.size() == rows[0].size(), "matrix: ragged rows");
      rows.push_back(std::move(row));
    }
    return Matrix::from_rows(rows);
  });
}

Json ring_to_json(const FusionRing& ring) {
  Json n = Json::array();
  for (int a = 0; a < ring.rank(); ++a)
    for (int b = 0; b < ring.rank(); ++b)
      for (int c = 0; c < ring.rank(); ++c)
        if (ring.N(a, b, c) > 0) n.push_back({a, b, c, ring.N(a, b, c)});
  return {{"labels", ring.labels()}, {"dual", ring.duals()}, {"N", n}};
}

FusionRing ring_from_json(const Json& j) {
  return guarded("fusion ring", [&] {
    auto labels = j.at("labels").get<std::vector<std::string>>();
    auto dual = j.at("dual").get<std::vector<int>>();
    const int r = static_cast<int>(labels.size());
    require(r >= 1, "fusion ring: no labels");
    require(static_cast<int>(dual.size()) == r, "fusion ring: dual has the wrong length");
    for (int d : dual) require(d >= 0 && d < r, "fusion ring: dual index out of range");
    FusionRing ring(labels, dual);
    for (const auto& e : j.at("N")) {
      require(e.is_array() && e.size() == 4, "fusion ring: N entries are [a, b, c, multiplicity]");
      int m = e[3].get<int>();
      require(m >= 0, "fusion ring: negative multiplicity");
      ring.set_N(label_index(e[0], r, "N"), label_index(e[1], r, "N"), label_index(e[2], r, "N"), m);
    }
    return ring;
  });
}

Json category_to_json(const CategoryData& cat, const std::string& provenance) {
  const auto& ring = cat.ring;
  Json F = Json::array();
  for (const auto& [k, m] : cat.F)
    F.push_back({{"labels", k},
                 {"rows", channels_to_json(f_left_channels(ring, k[0], k[1], k[2], k[3]))},
                 {"cols", channels_to_json(f_right_channels(ring, k[0], k[1], k[2], k[3]))},
                 {"matrix", matrix_to_json(m)}});
  Json R = Json::array();
  for (const auto& [k, m] : cat.R) R.push_back({{"labels", k}, {"matrix", matrix_to_json(m)}});
  Json theta = Json::object();
  for (int a = 0; a < static_cast<int>(cat.theta.size()); ++a) theta[ring.label(a)] = scalar_to_json(cat.theta[a]);
  Json out = {{"name", cat.name}, {"ring", ring_to_json(ring)}, {"F", F}, {"R", R}, {"theta", theta}};
  if (!provenance.empty()) out["provenance"] = provenance;
  return out;
}

CategoryData category_from_json(const Json& j) {
  return guarded("category", [&] {
    CategoryData cat;
    cat.name = j.value("name", std::string("unnamed"));
    cat.ring = ring_from_json(j.at("ring"));
    const auto& ring = cat.ring;
    const int r = ring.rank();
    for (const auto& e : j.value("F", Json::array())) {
      const auto& l = e.at("labels");
      require(l.size() == 4, "F: labels must be [a, b, c, d]");
      std::array<int, 4> k{};
      for (int i = 0; i < 4; ++i) k[i] = label_index(l[i], r, "F");
      auto rows = f_left_channels(ring, k[0], k[1], k[2], k[3]);
      auto cols = f_right_channels(ring, k[0], k[1], k[2], k[3]);
      if (e.contains("rows")) require(e.at("rows") == channels_to_json(rows), "F: row channels do not match the ring");
      if (e.contains("cols")) require(e.at("cols") == channels_to_json(cols), "F: column channels do not match the ring");
      Matrix m = matrix_from_json(e.at("matrix"));
      require(m.rows() == rows.size() && m.cols() == cols.size(), "F: matrix shape does not match the channels");
      require(!cat.F.count(k), "F: duplicate entry");
      cat.F[k] = std::move(m);
    }
    for (const auto& e : j.value("R", Json::array())) {
      const auto& l = e.at("labels");
      require(l.size() == 3, "R: labels must be [a, b, c]");
      std::array<int, 3> k{label_index(l[0], r, "R"), label_index(l[1], r, "R"), label_index(l[2], r, "R")};
      Matrix m = matrix_from_json(e.at("matrix"));
      require(m.rows() == static_cast<std::size_t>(ring.N(k[1], k[0], k[2])) &&
                  m.cols() == static_cast<std::size_t>(ring.N(k[0], k[1], k[2])),
              "R: matrix shape does not match the multiplicities");
      cat.R[k] = std::move(m);
    }
    cat.theta.assign(r, Scalar(1));
    if (j.contains("theta"))
      for (const auto& [name, v] : j.at("theta").items()) cat.theta[ring.index_of(name)] = scalar_from_json(v);
    cat.fill_defaults();
    return cat;
  });
}

std::string category_hash(const CategoryData& cat) {
  CategoryData c = cat;
  c.name.clear();
  c.fill_defaults();
  if (c.theta.empty()) c.theta.assign(c.rank(), Scalar(1));
  std::string s = category_to_json(c).dump();
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

Json functor_to_json(const FunctorData& F) {
  Json d = Json::array();
  for (const auto& m : F.d) d.push_back(matrix_to_json(m));
  Json seed = F.strategy.random ? Json(F.strategy.seed) : Json(nullptr);
  return {{"D", F.D.values}, {"exact", F.D.exact},        {"strategy", F.strategy.tag()},
          {"seed", seed},    {"c", pair_map_to_json(F.c)}, {"c_inv", pair_map_to_json(F.c_inv)},
          {"d", d},          {"repairs", F.repairs}};
}

FunctorData functor_from_json(const Json& j, std::shared_ptr<const CategoryData> cat) {
  return guarded("functor", [&] {
    FunctorData F;
    F.cat = cat;
    const int r = cat->rank();
    F.D.values = j.at("D").get<std::vector<long>>();
    F.D.exact = j.value("exact", false);
    require(static_cast<int>(F.D.values.size()) == r, "functor: D has the wrong length");
    require(is_weak_dimension_function(cat->ring, F.D.values).ok(), "functor: D is not a weak dimension function");
    if (!j.at("seed").is_null()) F.strategy = FunctorStrategy::with_seed(j.at("seed").get<long>());
    F.c = pair_map_from_json(j.at("c"), r);
    F.c_inv = pair_map_from_json(j.at("c_inv"), r);
    for (const auto& m : j.at("d")) F.d.push_back(matrix_from_json(m));
    require(static_cast<int>(F.d.size()) == r, "functor: one d matrix per label expected");
    F.repairs = j.value("repairs", std::vector<int>(r, 0));
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b) {
        require(F.c.count({a, b}) && F.c_inv.count({a, b}), "functor: missing tensorator");
        long dom = F.D.values[a] * F.D.values[b];
        long cod = 0;
        for (int z = 0; z < r; ++z) cod += cat->ring.N(a, b, z) * F.D.values[z];
        const Matrix& c = F.c.at({a, b});
        const Matrix& ci = F.c_inv.at({a, b});
        require(static_cast<long>(c.rows()) == cod && static_cast<long>(c.cols()) == dom &&
                    static_cast<long>(ci.rows()) == dom && static_cast<long>(ci.cols()) == cod,
                "functor: tensorator shape does not match D");
      }
    for (int a = 0; a < r; ++a)
      require(static_cast<long>(F.d[a].rows()) == F.D.values[cat->ring.dual(a)] &&
                  static_cast<long>(F.d[a].cols()) == F.D.values[a],
              "functor: d shape does not match D");
    return F;
  });
}

Json algebra_to_json(const WQHopf& H) {
  const auto& ring = H.cat().ring;
  Json blocks = Json::array();
  for (int a = 0; a < H.rank(); ++a)
    blocks.push_back({{"index", a}, {"label", ring.label(a)}, {"dimension", H.D[a]}});
  const auto& st = H.functor->strategy;
  Json provenance = {{"category_hash", category_hash(H.cat())},
                     {"category", H.cat().name},
                     {"D", H.D},
                     {"seed", st.random ? Json(st.seed) : Json("canonical")}};
  return {{"format", "wqhopf-algebra"},
          {"provenance", provenance},
          {"dimension", H.dimension()},
          {"blocks", blocks},
          {"category", category_to_json(H.cat())},
          {"functor", functor_to_json(*H.functor)},
          {"delta_unit", family_to_json(H.delta_unit)},
          {"phi", family_to_json(H.phi)},
          {"phi_inv", family_to_json(H.phi_inv)},
          {"R", family_to_json(H.R)},
          {"R_inv", family_to_json(H.R_inv)},
          {"alpha", family_to_json(H.alpha)},
          {"beta", family_to_json(H.beta)},
          {"v", family_to_json(H.ribbon_v)}};
}

WQHopf algebra_from_json(const Json& j) {
  return guarded("algebra", [&] {
    require(j.value("format", std::string()) == "wqhopf-algebra", "algebra: not an algebra dump");
    auto cat = std::make_shared<const CategoryData>(category_from_json(j.at("category")));
    const auto& prov = j.at("provenance");
    require(prov.at("category_hash").get<std::string>() == category_hash(*cat),
            "algebra: category hash does not match the embedded category");
    auto F = std::make_shared<FunctorData>(functor_from_json(j.at("functor"), cat));
    WQHopf H;
    H.D = F->D.values;
    require(prov.at("D").get<std::vector<long>>() == H.D, "algebra: provenance D differs from the functor");
    for (const auto& b : j.at("blocks")) {
      int a = label_index(b.at("index"), cat->rank(), "blocks");
      require(b.at("dimension").get<long>() == H.D[a], "algebra: block dimension differs from D");
    }
    H.delta_unit = family_from_json(j.at("delta_unit"), H.D, 2, "delta_unit");
    H.phi = family_from_json(j.at("phi"), H.D, 3, "phi");
    H.phi_inv = family_from_json(j.at("phi_inv"), H.D, 3, "phi_inv");
    H.R = family_from_json(j.at("R"), H.D, 2, "R");
    H.R_inv = family_from_json(j.at("R_inv"), H.D, 2, "R_inv");
    H.alpha = family_from_json(j.at("alpha"), H.D, 1, "alpha");
    H.beta = family_from_json(j.at("beta"), H.D, 1, "beta");
    H.ribbon_v = family_from_json(j.at("v"), H.D, 1, "v");
    for (int a = 0; a < cat->rank(); ++a) {
      H.dT.push_back(F->d[a].transpose());
      auto inv = inverse(H.dT.back());
      require(inv.has_value(), "algebra: singular duality matrix");
      H.dT_inv.push_back(*inv);
    }
    H.functor = F;
    return H;
  });
}

Json twist_to_json(const TwistElement& t) {
  return {{"T", family_to_json(t.T)}, {"T_inv", family_to_json(t.T_inv)}, {"comparison", pair_map_to_json(t.comparison)}};
}

Json report_to_json(const Report& r) {
  Json out = Json::array();
  for (const auto& c : r.checks()) {
    Json o = {{"id", c.id},
              {"status", c.pass ? "pass" : "fail"},
              {"worst_deviation", c.worst_deviation},
              {"witness_indices", c.witness_indices}};
    if (!c.note.empty()) o["note"] = c.note;
    out.push_back(o);
  }
  return out;
}

DimensionFunction dimension_from_json(const Json& j, const FusionRing& ring) {
  return guarded("dimension function", [&] {
    const Json& v = j.is_array() ? j : j.at("D");
    DimensionFunction D;
    D.values = v.get<std::vector<long>>();
    require(static_cast<int>(D.values.size()) == ring.rank(), "dimension function: wrong length");
    bool exact = false;
    Report rep = is_weak_dimension_function(ring, D.values, &exact);
    require(rep.ok(), "dimension function: not weak");
    D.exact = exact;
    return D;
  });
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << j.dump(1) << '\n';
}

CategoryData approximate(const CategoryData& cat) {
  CategoryData out = cat;
  for (auto& [k, m] : out.F) m = m.to_approx();
  for (auto& [k, m] : out.R) m = m.to_approx();
  for (auto& t : out.theta) t = t.to_approx();
  return out;
}

}  // namespace wqh
