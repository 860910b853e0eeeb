#include "tspectral/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tspectral/error.hpp"

namespace tspectral {
namespace {

using nlohmann::json;

[[noreturn]] void fail_field(const std::string& field, const std::string& what) {
  throw ParseError("field '" + field + "': " + what);
}

double finite_number(const json& v, const std::string& field) {
  if (!v.is_number()) fail_field(field, "expected a number, got " + std::string(v.type_name()));
  const double x = v.get<double>();
  if (!std::isfinite(x)) fail_field(field, "non-finite value");
  return x;
}

Index positive_dim(const json& v, const std::string& field) {
  if (!v.is_number_integer() || v.get<long long>() < 1)
    fail_field(field, "expected a positive integer");
  return static_cast<Index>(v.get<long long>());
}

std::size_t line_of(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

}  // namespace

std::string tensor_to_json(const Tensor3& t) {
  json doc;
  doc["dims"] = {t.rows(), t.cols(), t.tubes()};
  doc["kind"] = t.is_real() ? "real" : "complex";
  json data = json::array();
  const auto re = t.real_data();
  const auto im = t.imag_data();
  for (std::size_t i = 0; i < re.size(); ++i) {
    if (!std::isfinite(re[i]) || (!im.empty() && !std::isfinite(im[i])))
      throw DomainError("cannot serialize non-finite entry at flat index " + std::to_string(i));
    if (t.is_real()) {
      data.push_back(re[i]);
    } else {
      data.push_back({re[i], im[i]});
    }
  }
  doc["data"] = std::move(data);
  return doc.dump() + "\n";
}

Tensor3 tensor_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    std::ostringstream os;
    os << "line " << line_of(text, e.byte) << ": " << e.what();
    throw ParseError(os.str());
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
  if (!doc.is_object()) throw ParseError("top level: expected a JSON object");
  for (const char* key : {"dims", "kind", "data"})
    if (!doc.contains(key)) fail_field(key, "missing");

  const json& dims = doc["dims"];
  if (!dims.is_array() || dims.size() != 3) fail_field("dims", "expected [m, n, p]");
  const Index m = positive_dim(dims[0], "dims[0]");
  const Index n = positive_dim(dims[1], "dims[1]");
  const Index p = positive_dim(dims[2], "dims[2]");

  const json& kind = doc["kind"];
  if (!kind.is_string() || (kind != "real" && kind != "complex"))
    fail_field("kind", "expected \"real\" or \"complex\"");

  const json& data = doc["data"];
  if (!data.is_array()) fail_field("data", "expected an array");
  const auto expected = static_cast<std::size_t>(m * n * p);
  if (data.size() != expected) {
    std::ostringstream os;
    os << "length " << data.size() << " does not equal m*n*p = " << expected;
    fail_field("data", os.str());
  }

  if (kind == "real") {
    std::vector<double> values(expected);
    for (std::size_t i = 0; i < expected; ++i)
      values[i] = finite_number(data[i], "data[" + std::to_string(i) + "]");
    return Tensor3::from_real(m, n, p, std::move(values));
  }
  std::vector<Complex> values(expected);
  for (std::size_t i = 0; i < expected; ++i) {
    const std::string field = "data[" + std::to_string(i) + "]";
    const json& pair = data[i];
    if (!pair.is_array() || pair.size() != 2) fail_field(field, "expected [re, im]");
    values[i] = {finite_number(pair[0], field + "[0]"), finite_number(pair[1], field + "[1]")};
  }
  return Tensor3::from_complex(m, n, p, std::move(values));
}

Tensor3 read_tensor(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open tensor file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return tensor_from_json(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_tensor(const Tensor3& t, const std::filesystem::path& path) {
  const std::string text = tensor_to_json(t);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write tensor file '" + path.string() + "'");
  out << text;
}

}  // namespace tspectral
