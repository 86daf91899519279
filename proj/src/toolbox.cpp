// Copyright 2026 The Autobench Authors
// SPDX-License-Identifier: Apache-2.0

#include "autobench/toolbox.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

#include "autobench/errors.hpp"

namespace autobench {
namespace {

std::string Where(std::string_view path) {
  return path.empty() ? std::string("/") : std::string(path);
}

std::string TypeName(const Json& v) {
  if (v.is_null()) return "null";
  if (v.is_boolean()) return "bool";
  if (v.is_number_integer() || v.is_number_unsigned()) return "int";
  if (v.is_number_float()) return "float";
  if (v.is_string()) return "string";
  if (v.is_array()) return "array";
  return "object";
}

std::string ExpectedName(const ArgSpec& arg) {
  switch (arg.type) {
    case ArgType::kFloat: return "float";
    case ArgType::kInt: return "int";
    case ArgType::kString: return "string";
    case ArgType::kBool: return "bool";
    case ArgType::kColor: return "[r, g, b] with integer components in 0..255";
    case ArgType::kEnum: {
      std::string out = "one of";
      for (std::size_t i = 0; i < arg.choices.size(); ++i) {
        out += (i ? ", \"" : " \"") + arg.choices[i] + "\"";
      }
      return out;
    }
    case ArgType::kStringOrNone: return "string or null";
  }
  return "?";
}

std::string FormatNumber(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

Json CheckRange(const ArgSpec& arg, Json value, const std::string& where) {
  const double v = value.get<double>();
  if (!std::isfinite(v)) throw ValidationError(where + ": value must be finite");
  if (arg.min && v < *arg.min) {
    throw ValidationError(where + ": must be >= " + FormatNumber(*arg.min) + ", got " +
                          FormatNumber(v));
  }
  if (arg.max && v > *arg.max) {
    throw ValidationError(where + ": must be <= " + FormatNumber(*arg.max) + ", got " +
                          FormatNumber(v));
  }
  return value;
}

Json CoerceArg(const ArgSpec& arg, const Json& value, const std::string& where) {
  auto mismatch = [&] {
    return ValidationError(where + ": expected " + ExpectedName(arg) + ", got " +
                           TypeName(value));
  };
  switch (arg.type) {
    case ArgType::kFloat:
      if (!value.is_number()) throw mismatch();
      return CheckRange(arg, Json(value.get<double>()), where);
    case ArgType::kInt: {
      if (!value.is_number()) throw mismatch();
      const double d = value.get<double>();
      if (std::floor(d) != d) throw mismatch();
      return CheckRange(arg, Json(static_cast<std::int64_t>(d)), where);
    }
    case ArgType::kString:
      if (!value.is_string()) throw mismatch();
      return value;
    case ArgType::kBool:
      if (!value.is_boolean()) throw mismatch();
      return value;
    case ArgType::kColor: {
      if (!value.is_array() || value.size() != 3) throw mismatch();
      Json out = Json::array();
      for (const auto& c : value) {
        if (!c.is_number() || std::floor(c.get<double>()) != c.get<double>() ||
            c.get<double>() < 0 || c.get<double>() > 255) {
          throw mismatch();
        }
        out.push_back(static_cast<int>(c.get<double>()));
      }
      return out;
    }
    case ArgType::kEnum: {
      if (!value.is_string()) throw mismatch();
      for (const auto& c : arg.choices) {
        if (c == value.get<std::string>()) return value;
      }
      throw ValidationError(where + ": expected " + ExpectedName(arg) + ", got \"" +
                            value.get<std::string>() + "\"");
    }
    case ArgType::kStringOrNone:
      if (!value.is_string() && !value.is_null()) throw mismatch();
      return value;
  }
  throw mismatch();
}

// --- compact call literal parser -------------------------------------------

class LiteralParser {
 public:
  explicit LiteralParser(std::string_view text) : text_(text) {}

  CallArguments ParseArguments() {
    CallArguments out;
    SkipSpace();
    if (AtEnd()) return out;
    while (true) {
      SkipSpace();
      // keyword argument?
      std::size_t save = pos_;
      std::string ident = Identifier();
      SkipSpace();
      if (!ident.empty() && Peek() == '=' ) {
        ++pos_;
        SkipSpace();
        out.keyword.emplace_back(ident, Value());
      } else {
        pos_ = save;
        if (!out.keyword.empty()) Fail("positional argument after keyword argument");
        out.positional.push_back(Value());
      }
      SkipSpace();
      if (AtEnd()) break;
      if (Peek() != ',') Fail("expected ',' between arguments");
      ++pos_;
      SkipSpace();
      if (AtEnd()) break;  // trailing comma
    }
    return out;
  }

 private:
  bool AtEnd() const { return pos_ >= text_.size(); }
  char Peek() const { return AtEnd() ? '\0' : text_[pos_]; }
  void SkipSpace() {
    while (!AtEnd() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void Fail(const std::string& what) const {
    throw ValidationError("cannot parse call arguments at offset " + std::to_string(pos_) +
                          ": " + what);
  }

  std::string Identifier() {
    std::size_t start = pos_;
    if (AtEnd() || !(std::isalpha(static_cast<unsigned char>(Peek())) || Peek() == '_')) {
      return {};
    }
    while (!AtEnd() && (std::isalnum(static_cast<unsigned char>(Peek())) || Peek() == '_')) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  Json Value() {
    SkipSpace();
    const char c = Peek();
    if (c == '"' || c == '\'') return String();
    if (c == '[' || c == '(') return Sequence();
    if (c == '-' || c == '+' || c == '.' || std::isdigit(static_cast<unsigned char>(c))) {
      return Number();
    }
    std::string ident = Identifier();
    if (ident == "True" || ident == "true") return true;
    if (ident == "False" || ident == "false") return false;
    if (ident == "None" || ident == "null") return nullptr;
    Fail(ident.empty() ? "unexpected character" : "unknown literal '" + ident + "'");
  }

  Json String() {
    const char quote = text_[pos_++];
    std::string out;
    while (!AtEnd() && Peek() != quote) {
      char ch = text_[pos_++];
      if (ch == '\\' && !AtEnd()) ch = text_[pos_++];
      out.push_back(ch);
    }
    if (AtEnd()) Fail("unterminated string");
    ++pos_;
    return out;
  }

  Json Sequence() {
    const char close = text_[pos_++] == '[' ? ']' : ')';
    Json out = Json::array();
    SkipSpace();
    while (Peek() != close) {
      out.push_back(Value());
      SkipSpace();
      if (Peek() == ',') {
        ++pos_;
        SkipSpace();
      } else if (Peek() != close) {
        Fail(std::string("expected ',' or '") + close + "'");
      }
    }
    ++pos_;
    return out;
  }

  Json Number() {
    std::size_t start = pos_;
    if (Peek() == '-' || Peek() == '+') ++pos_;
    bool is_float = false;
    while (!AtEnd()) {
      char ch = Peek();
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        ++pos_;
      } else if (ch == '.' || ch == 'e' || ch == 'E') {
        is_float = true;
        ++pos_;
        if ((ch == 'e' || ch == 'E') && (Peek() == '-' || Peek() == '+')) ++pos_;
      } else {
        break;
      }
    }
    std::string token(text_.substr(start, pos_ - start));
    try {
      std::size_t used = 0;
      if (is_float) {
        double d = std::stod(token, &used);
        if (used != token.size()) Fail("bad number '" + token + "'");
        return d;
      }
      long long v = std::stoll(token, &used);
      if (used != token.size()) Fail("bad number '" + token + "'");
      return v;
    } catch (const std::logic_error&) {
      Fail("bad number '" + token + "'");
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Json ToolCall::ToJson() const {
  Json j = Json::object();
  j["module_path"] = module_path;
  j["name"] = name;
  j["kwargs"] = kwargs;
  return j;
}

std::string Docstring(const ToolSpec& spec) {
  std::string out = spec.summary;
  out += "\n\n";
  if (!spec.description.empty()) out += spec.description + "\n\n";
  out += "Args:\n----\n";
  if (spec.args.empty()) {
    out += "None";
  } else {
    for (std::size_t i = 0; i < spec.args.size(); ++i) {
      if (i) out += "\n";
      out += spec.args[i].doc;
    }
  }
  out += "\n\nExamples:\n--------\n";
  out += spec.examples;
  return out;
}

CallArguments ParseCallArguments(std::string_view text) {
  return LiteralParser(text).ParseArguments();
}

ToolRegistry::ToolRegistry(std::vector<ToolSpec> specs) {
  for (auto& s : specs) Add(std::move(s));
}

const ToolRegistry& ToolRegistry::Default() {
  static const ToolRegistry registry(BuiltinToolSpecs());
  return registry;
}

void ToolRegistry::Add(ToolSpec spec) {
  if (Find(spec.full_name())) throw ConfigError("duplicate tool " + spec.full_name());
  specs_.push_back(std::move(spec));
}

const ToolSpec* ToolRegistry::Find(std::string_view full_name) const {
  for (const auto& s : specs_) {
    if (s.full_name() == full_name) return &s;
  }
  return nullptr;
}

std::vector<const ToolSpec*> ToolRegistry::OfKind(ToolKind kind) const {
  std::vector<const ToolSpec*> out;
  for (const auto& s : specs_) {
    if (s.kind == kind) out.push_back(&s);
  }
  return out;
}

std::vector<std::string> ToolRegistry::Names() const {
  std::vector<std::string> out;
  for (const auto& s : specs_) out.push_back(s.full_name());
  return out;
}

void ToolRegistry::ValidateDocs() const {
  if (specs_.empty()) throw ValidationError("tool registry is empty");
  for (const auto& s : specs_) {
    if (s.summary.empty()) {
      throw ValidationError("tool " + s.full_name() + " has an empty docstring");
    }
  }
}

ToolCall ToolRegistry::Canonicalize(const ToolCall& call, std::optional<ToolKind> expected,
                                    std::string_view path) const {
  const std::string full = call.full_name();
  const ToolSpec* spec = Find(full);
  if (!spec) {
    std::string available;
    for (const auto& s : specs_) {
      if (expected && s.kind != *expected) continue;
      available += (available.empty() ? "" : ", ") + s.full_name();
    }
    throw ValidationError(Where(path) + ": unknown tool " + full + "; available: " + available);
  }
  if (expected && spec->kind != *expected) {
    throw ValidationError(Where(path) + ": " + full + " is a " +
                          (spec->kind == ToolKind::kSelect ? "select" : "transform") +
                          " tool; expected a " +
                          (*expected == ToolKind::kSelect ? "select" : "transform") + " tool");
  }
  if (!call.kwargs.is_object()) {
    throw ValidationError(Where(path) + "/kwargs: expected object, got " + TypeName(call.kwargs));
  }
  for (auto it = call.kwargs.begin(); it != call.kwargs.end(); ++it) {
    bool known = false;
    for (const auto& a : spec->args) known = known || a.name == it.key();
    if (!known) {
      std::string accepted;
      for (const auto& a : spec->args) accepted += (accepted.empty() ? "" : ", ") + a.name;
      throw ValidationError(std::string(path) + "/kwargs/" + it.key() +
                            ": unexpected argument for " + full + "; accepted: " +
                            (accepted.empty() ? "none" : accepted));
    }
  }
  ToolCall out{spec->module_path, spec->name, Json::object()};
  for (const auto& a : spec->args) {
    const std::string where = std::string(path) + "/kwargs/" + a.name;
    auto it = call.kwargs.find(a.name);
    if (it == call.kwargs.end()) {
      if (!a.default_value) {
        throw ValidationError(where + ": missing required argument of " + full);
      }
      out.kwargs[a.name] = *a.default_value;
    } else {
      out.kwargs[a.name] = CoerceArg(a, *it, where);
    }
  }
  return out;
}

ToolCall ToolRegistry::ParseCompact(std::string_view text, std::string_view path) const {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  std::string_view head = text;
  std::string_view args;
  if (auto open = text.find('('); open != std::string_view::npos) {
    if (text.back() != ')') {
      throw ValidationError(Where(path) + ": malformed call \"" + std::string(text) + "\"");
    }
    head = trim(text.substr(0, open));
    args = text.substr(open + 1, text.size() - open - 2);
  }
  const auto dot = head.rfind('.');
  if (dot == std::string_view::npos) {
    throw ValidationError(Where(path) + ": tool reference \"" + std::string(head) +
                          "\" must be a dotted path such as src.tools.transform.Identity");
  }
  ToolCall call{std::string(head.substr(0, dot)), std::string(head.substr(dot + 1)),
                Json::object()};
  const ToolSpec* spec = Find(call.full_name());
  if (!spec) return Canonicalize(call, std::nullopt, path);  // raises unknown-tool

  CallArguments parsed;
  try {
    parsed = ParseCallArguments(args);
  } catch (const ValidationError& e) {
    throw ValidationError(Where(path) + ": " + e.what());
  }
  if (parsed.positional.size() > spec->args.size()) {
    throw ValidationError(Where(path) + ": " + call.full_name() + " takes at most " +
                          std::to_string(spec->args.size()) + " argument(s), got " +
                          std::to_string(parsed.positional.size()));
  }
  for (std::size_t i = 0; i < parsed.positional.size(); ++i) {
    call.kwargs[spec->args[i].name] = parsed.positional[i];
  }
  for (auto& [key, value] : parsed.keyword) {
    if (call.kwargs.contains(key)) {
      throw ValidationError(std::string(path) + "/kwargs/" + key + ": given more than once");
    }
    call.kwargs[key] = value;
  }
  return Canonicalize(call, std::nullopt, path);
}

ToolCall ToolRegistry::Parse(const Json& raw, std::string_view path) const {
  if (raw.is_string()) return ParseCompact(raw.get<std::string>(), path);
  if (!raw.is_object()) {
    throw ValidationError(Where(path) + ": expected tool call object or call string, got " +
                          TypeName(raw));
  }
  for (const char* key : {"module_path", "name"}) {
    if (!raw.contains(key)) {
      throw ValidationError(std::string(path) + "/" + key + ": missing required field");
    }
    if (!raw[key].is_string()) {
      throw ValidationError(std::string(path) + "/" + key + ": expected string, got " +
                            TypeName(raw[key]));
    }
  }
  ToolCall call{raw["module_path"].get<std::string>(), raw["name"].get<std::string>(),
                Json::object()};
  if (auto it = raw.find("kwargs"); it != raw.end() && !it->is_null()) call.kwargs = *it;
  return Canonicalize(call, std::nullopt, path);
}

ImageBuffer ToolRegistry::Apply(const ToolCall& call, const ImageBuffer& image,
                                TransformContext& ctx) const {
  const ToolSpec* spec = Find(call.full_name());
  if (!spec || spec->kind != ToolKind::kTransform || !spec->apply) {
    throw ToolError(call.full_name() + " is not an executable transform tool");
  }
  if (image.width() != kCanvasSize || image.height() != kCanvasSize) {
    throw ToolError(call.full_name() + ": input must be standardized to 512x512");
  }
  return spec->apply(Canonicalize(call, ToolKind::kTransform), image, ctx);
}

}  // namespace autobench
