#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "json_io.hpp"
#include "render.hpp"
#include "selftest.hpp"
#include "sphere_lam/fan.hpp"

namespace {

using sphere_lam::io::Json;
namespace sl = sphere_lam;
namespace io = sphere_lam::io;

constexpr int kDomainError = 1;
constexpr int kUsageError = 2;
constexpr std::int64_t kDefaultMaxHeight = 6;

// A flag value that does not parse; reported as a usage error naming the flag.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class F>
auto from_flag(const std::string& flag, const std::string& text, F&& parse) {
  try {
    return parse(io::parse_text(text));
  } catch (const sl::Error& e) {
    if (e.kind() != sl::ErrorKind::Parse) throw;
    throw UsageError("--" + flag + ": " + e.what());
  }
}

template <class F>
auto from_text_flag(const std::string& flag, const std::string& text, F&& parse) {
  try {
    return parse(text);
  } catch (const sl::Error& e) {
    if (e.kind() != sl::ErrorKind::Parse) throw;
    throw UsageError("--" + flag + ": " + e.what());
  }
}

void check_height(std::int64_t h) {
  if (h < 1 || h > sl::kMaxHeight) {
    throw UsageError("--max-height: must lie in [1, " + std::to_string(sl::kMaxHeight) + "]");
  }
}

struct Output {
  bool plain = false;

  void emit(const Json& j) const {
    if (!plain) {
      std::cout << j.dump() << '\n';
      return;
    }
    if (j.is_object()) {
      for (const auto& [key, value] : j.items()) {
        if (key == "schema") continue;
        std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
      }
    } else if (j.is_array() && !j.empty() && j[0].is_array()) {
      for (const auto& row : j) std::cout << row.dump() << '\n';
    } else {
      std::cout << j.dump() << '\n';
    }
  }
};

Json triangulation_doc(const sl::TaggedTriangulation& t) {
  Json d = io::document();
  const Json body = io::to_json(t);
  for (const auto& [k, v] : body.items()) d[k] = v;
  return d;
}

sl::TaggedTriangulation tri_or_base(const std::string& flag, const std::string& text) {
  if (text.empty()) return sl::base_triangulation();
  return from_flag(flag, text, io::triangulation_from_json);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arcs, curves, shear coordinates and the quasi-lamination fan of the four-punctured sphere"};
  app.require_subcommand(1);
  Output out;
  app.add_flag("--plain", out.plain, "Print key: value lines instead of one JSON document");

  std::string curve_text, tri_text, method_text = "formula";
  auto* shear_cmd = app.add_subcommand("shear", "Shear coordinates of one curve");
  shear_cmd->add_option("--curve", curve_text, "Curve JSON")->required();
  shear_cmd->add_option("--tri", tri_text, "Type-I triangulation JSON {triple, tags}; default T0");
  shear_cmd->add_option("--method", method_text, "formula | word | oracle")->check(CLI::IsMember({"formula", "word", "oracle"}));

  std::string a_text, b_text;
  auto* compat_cmd = app.add_subcommand("compat", "Compatibility of two arcs or two curves");
  compat_cmd->add_option("--a", a_text, "Arc or curve JSON")->required();
  compat_cmd->add_option("--b", b_text, "Arc or curve JSON")->required();

  std::string kind_text, p_text, q_text, r_text, v_text = "00", v_prime_text = "01";
  std::vector<std::string> notched;
  auto* tri_cmd = app.add_subcommand("triangulate", "Build a triangulation from its taxonomy parameters");
  tri_cmd->add_option("--type", kind_text, "I | II | III | IV | V | VI")->required();
  tri_cmd->add_option("--p", p_text, "First slope")->required();
  tri_cmd->add_option("--q", q_text, "Second slope")->required();
  tri_cmd->add_option("--r", r_text, "Third slope (types I and VI)");
  tri_cmd->add_option("--v", v_text, "Distinguished puncture v (types II to VI)");
  tri_cmd->add_option("--v-prime", v_prime_text, "Puncture v' (types III and IV)");
  tri_cmd->add_option("--notched", notched, "Punctures tagged notched, e.g. --notched 00 --notched 11");

  auto* classify_cmd = app.add_subcommand("classify", "Type and parameters of a triangulation");
  classify_cmd->add_option("--tri", tri_text, "Triangulation JSON")->required();

  std::size_t k = 0;
  auto* flip_cmd = app.add_subcommand("flip", "Flip one arc of a triangulation");
  flip_cmd->add_option("--tri", tri_text, "Triangulation JSON; default T0");
  flip_cmd->add_option("--k", k, "Arc index, 0-based")->required()->check(CLI::Range(0, 5));

  auto* badj_cmd = app.add_subcommand("badj", "Signed adjacency matrix of a plain triangulation");
  badj_cmd->add_option("--tri", tri_text, "Triangulation JSON; default T0");

  std::string matrix_text;
  auto* mutate_cmd = app.add_subcommand("mutate", "Matrix mutation");
  mutate_cmd->add_option("--matrix", matrix_text, "6x6 matrix JSON; default B(T0)");
  mutate_cmd->add_option("--k", k, "Direction, 0-based")->required()->check(CLI::Range(0, 5));

  std::int64_t max_height = kDefaultMaxHeight;
  bool counts_only = false, json_flag = false;
  auto* cones_cmd = app.add_subcommand("cones", "Maximal cones of the fan up to a height");
  cones_cmd->add_option("--max-height", max_height, "Slope height bound")->capture_default_str();
  cones_cmd->add_flag("--json", json_flag, "JSON output (the default)");
  cones_cmd->add_flag("--counts-only", counts_only, "Only the number of cones per type");

  std::string vector_text;
  auto* locate_cmd = app.add_subcommand("locate", "Quasi-lamination with a given shear vector");
  locate_cmd->add_option("--vector", vector_text, "Integer 6-vector JSON")->required();
  locate_cmd->add_option("--max-height", max_height, "Slope height bound")->capture_default_str();

  auto* g_cmd = app.add_subcommand("gvectors", "Shear vectors of open curves");
  g_cmd->add_option("--max-height", max_height, "Reduced slope height bound")->capture_default_str();

  std::string form_text = "thm12";
  auto* uni_cmd = app.add_subcommand("universal", "Universal coefficient list");
  uni_cmd->add_option("--form", form_text, "thm12 | thm81")->check(CLI::IsMember({"thm12", "thm81"}))->capture_default_str();
  uni_cmd->add_option("--max-height", max_height, "Slope height bound")->capture_default_str();

  std::string tangle_text;
  auto* tangle_cmd = app.add_subcommand("tangle-check", "Search for a triangulation separating a tangle from zero");
  tangle_cmd->add_option("--tangle", tangle_text, "Tangle JSON [{curve, weight}, ...]")->required();
  tangle_cmd->add_option("--max-height", max_height, "Bound for the fallback triple search")->capture_default_str();

  std::string curves_text = "[]", window_text = "0,0,2,2", out_path;
  int scale = 80;
  auto* render_cmd = app.add_subcommand("render", "SVG of the lifted triangulation and curves");
  render_cmd->add_option("--curves", curves_text, "Curve JSON or array of curves");
  render_cmd->add_option("--tri", tri_text, "Type-I triangulation JSON; default T0");
  render_cmd->add_option("--window", window_text, "x0,y0,x1,y1")->capture_default_str();
  render_cmd->add_option("--scale", scale, "Pixels per lattice unit")->capture_default_str();
  render_cmd->add_option("--out", out_path, "Output file; default stdout");

  auto* selftest_cmd = app.add_subcommand("selftest", "Run the published fixtures");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kUsageError;
  }

  try {
    if (*shear_cmd) {
      const auto curve = from_flag("curve", curve_text, io::curve_from_json);
      const auto method = sl::parse_shear_method(method_text);
      if (tri_text.empty()) {
        out.emit(io::to_json(sl::shear(curve, method)));
      } else {
        const auto t = from_flag("tri", tri_text, io::type_i_from_json);
        if (method == sl::ShearMethod::Word) throw UsageError("--method: word is only defined for T0");
        out.emit(io::to_json(method == sl::ShearMethod::Oracle ? sl::shear_oracle_wrt(curve, t) : sl::shear_wrt(curve, t)));
      }
    } else if (*compat_cmd) {
      const Json a = from_flag("a", a_text, [](const Json& j) { return j; });
      const Json b = from_flag("b", b_text, [](const Json& j) { return j; });
      Json d = io::document();
      if (io::is_arc_json(a) && io::is_arc_json(b)) {
        const auto x = from_flag("a", a_text, io::arc_from_json);
        const auto y = from_flag("b", b_text, io::arc_from_json);
        d["compatible"] = sl::arcs_compatible(x, y);
        d["class"] = std::string(sl::to_string(sl::classify_pair(x, y)));
      } else {
        const auto x = from_flag("a", a_text, io::curve_from_json);
        const auto y = from_flag("b", b_text, io::curve_from_json);
        d["compatible"] = sl::curves_compatible(x, y);
      }
      out.emit(d);
    } else if (*tri_cmd) {
      sl::TriType spec;
      spec.kind = from_text_flag("type", kind_text, sl::parse_tri_kind);
      spec.slopes.push_back(from_text_flag("p", p_text, sl::parse_slope));
      spec.slopes.push_back(from_text_flag("q", q_text, sl::parse_slope));
      if (spec.kind == sl::TriKind::I || spec.kind == sl::TriKind::VI) {
        if (r_text.empty()) throw UsageError("--r: required for types I and VI");
        spec.slopes.push_back(from_text_flag("r", r_text, sl::parse_slope));
      }
      spec.v = from_text_flag("v", v_text, sl::parse_puncture);
      spec.v_prime = from_text_flag("v-prime", v_prime_text, sl::parse_puncture);
      for (const auto& n : notched) spec.tags[from_text_flag("notched", n, sl::parse_puncture).index()] = sl::Tagging::Notched;
      out.emit(triangulation_doc(sl::build_type(spec)));
    } else if (*classify_cmd) {
      const auto t = from_flag("tri", tri_text, io::triangulation_from_json);
      Json d = io::document();
      d["type"] = io::to_json(sl::classify(t));
      const auto deg = t.degree_sequence();
      d["degree_sequence"] = std::vector<int>(deg.begin(), deg.end());
      d["all_plain"] = t.all_plain();
      out.emit(d);
    } else if (*flip_cmd) {
      out.emit(triangulation_doc(sl::flip(tri_or_base("tri", tri_text), k)));
    } else if (*badj_cmd) {
      out.emit(io::to_json(sl::signed_adjacency(tri_or_base("tri", tri_text))));
    } else if (*mutate_cmd) {
      const auto b = matrix_text.empty() ? sl::signed_adjacency(sl::base_triangulation())
                                         : from_flag("matrix", matrix_text, io::matrix_from_json);
      if (!sl::is_skew_symmetric(b)) throw UsageError("--matrix: must be skew-symmetric");
      out.emit(io::to_json(sl::mutate(b, k)));
    } else if (*cones_cmd) {
      check_height(max_height);
      std::map<std::string, std::size_t> counts;
      Json list = Json::array();
      for (const auto& c : sl::maximal_collections(max_height)) {
        ++counts[std::string(sl::to_string(c.kind()))];
        if (!counts_only) list.push_back(io::to_json(sl::cone_of(c)));
      }
      Json d = io::document();
      d["max_height"] = max_height;
      d["counts"] = counts;
      if (!counts_only) d["cones"] = std::move(list);
      out.emit(d);
    } else if (*locate_cmd) {
      check_height(max_height);
      const auto v = from_flag("vector", vector_text, io::shear_vector_from_json);
      Json d = io::document();
      d["lamination"] = io::to_json(sl::locate(v, max_height));
      out.emit(d);
    } else if (*g_cmd) {
      check_height(max_height);
      Json list = Json::array();
      for (const auto& v : sl::g_vectors(max_height)) list.push_back(io::to_json(v));
      out.emit(list);
    } else if (*uni_cmd) {
      check_height(max_height);
      Json list = Json::array();
      for (const auto& v : sl::universal_coeffs(max_height, sl::parse_universal_form(form_text))) list.push_back(io::to_json(v));
      out.emit(list);
    } else if (*tangle_cmd) {
      check_height(max_height);
      const auto x = from_flag("tangle", tangle_text, io::tangle_from_json);
      const auto w = sl::find_witness(x, max_height);
      Json d = io::document();
      d["empty"] = x.empty();
      d["witness"] = w ? io::to_json(*w) : Json(nullptr);
      d["shear"] = io::to_json(sl::tangle_shear(x, w.value_or(sl::TypeITri::base())));
      out.emit(d);
    } else if (*render_cmd) {
      sl::render::RenderSpec spec;
      const Json cj = from_flag("curves", curves_text, [](const Json& j) { return j; });
      const Json list = cj.is_array() ? cj : Json::array({cj});
      for (const auto& c : list) spec.curves.push_back(from_flag("curves", c.dump(), io::curve_from_json));
      if (!tri_text.empty()) spec.triangulation = from_flag("tri", tri_text, io::type_i_from_json);
      std::array<std::int64_t, 4> box{};
      std::istringstream in(window_text);
      char comma = 0;
      if (!(in >> box[0] >> comma >> box[1] >> comma >> box[2] >> comma >> box[3]) || !(in >> std::ws).eof()) {
        throw UsageError("--window: expected x0,y0,x1,y1");
      }
      spec.window = {box[0], box[1], box[2], box[3]};
      if (spec.window.x1 <= spec.window.x0 || spec.window.y1 <= spec.window.y0) throw UsageError("--window: empty window");
      spec.scale = scale;
      const std::string svg = sl::render::render_svg(spec);
      if (out_path.empty()) {
        std::cout << svg;
      } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!(f << svg)) throw std::runtime_error("cannot write " + out_path);
        Json d = io::document();
        d["written"] = out_path;
        out.emit(d);
      }
    } else if (*selftest_cmd) {
      const auto checks = sl::selftest::run();
      Json d = io::document();
      Json list = Json::array();
      std::size_t failed = 0;
      for (const auto& c : checks) {
        Json item{{"name", c.name}, {"ok", c.ok}};
        if (!c.ok) {
          item["detail"] = c.detail;
          ++failed;
        }
        list.push_back(item);
      }
      d["passed"] = checks.size() - failed;
      d["failed"] = failed;
      d["checks"] = list;
      out.emit(d);
      return failed == 0 ? 0 : kDomainError;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const sl::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return 0;
}
