#include "layerrisk/model_io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace layerrisk {
namespace {

enum class TokenKind { identifier, string, number, punct };

struct Token {
  TokenKind kind;
  std::string text;
};

struct SyntaxError {
  std::string message;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  auto is_ident = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
  while (i < line.size()) {
    const char c = line[i];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '"') {
      auto close = line.find('"', i + 1);
      if (close == std::string_view::npos) throw SyntaxError{"unterminated string"};
      tokens.push_back({TokenKind::string, std::string(line.substr(i + 1, close - i - 1))});
      i = close + 1;
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      auto start = i;
      while (i < line.size() && is_ident(line[i])) ++i;
      tokens.push_back({TokenKind::identifier, std::string(line.substr(start, i - start))});
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      auto start = i;
      while (i < line.size() &&
             (std::isdigit(static_cast<unsigned char>(line[i])) || line[i] == '.' || line[i] == '/')) {
        ++i;
      }
      tokens.push_back({TokenKind::number, std::string(line.substr(start, i - start))});
    } else if (c == '*' && i + 1 < line.size() && line[i + 1] == '=') {
      tokens.push_back({TokenKind::punct, "*="});
      i += 2;
    } else if (std::string_view("{}[](),=").find(c) != std::string_view::npos) {
      tokens.push_back({TokenKind::punct, std::string(1, c)});
      ++i;
    } else {
      throw SyntaxError{std::string("unexpected character '") + c + "'"};
    }
  }
  return tokens;
}

class Cursor {
 public:
  explicit Cursor(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  bool done() const { return pos_ == tokens_.size(); }
  const Token* peek(std::size_t ahead = 0) const {
    return pos_ + ahead < tokens_.size() ? &tokens_[pos_ + ahead] : nullptr;
  }
  bool at(std::string_view punct_or_word) const {
    const Token* t = peek();
    return t && t->kind != TokenKind::string && t->kind != TokenKind::number && t->text == punct_or_word;
  }

  std::string identifier(std::string_view what) {
    const Token& t = next(what);
    if (t.kind != TokenKind::identifier) throw SyntaxError{"expected " + std::string(what) + ", got '" + t.text + "'"};
    return t.text;
  }
  std::string string(std::string_view what) {
    const Token& t = next(what);
    if (t.kind != TokenKind::string) throw SyntaxError{"expected " + std::string(what)};
    return t.text;
  }
  std::string number(std::string_view what) {
    const Token& t = next(what);
    if (t.kind != TokenKind::number) throw SyntaxError{"expected " + std::string(what) + ", got '" + t.text + "'"};
    return t.text;
  }
  void expect(std::string_view punct_or_word) {
    if (!at(punct_or_word)) {
      const Token* t = peek();
      throw SyntaxError{"expected '" + std::string(punct_or_word) + "'" +
                        (t ? ", got '" + t->text + "'" : " at end of line")};
    }
    ++pos_;
  }
  bool accept(std::string_view punct_or_word) {
    if (!at(punct_or_word)) return false;
    ++pos_;
    return true;
  }
  void finish() {
    if (!done()) throw SyntaxError{"unexpected '" + tokens_[pos_].text + "'"};
  }

 private:
  const Token& next(std::string_view what) {
    if (done()) throw SyntaxError{"expected " + std::string(what) + " at end of line"};
    return tokens_[pos_++];
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

Probability probability(Cursor& cur) {
  auto text = cur.number("probability");
  auto value = parse_rational(text);
  if (!value) throw SyntaxError{"malformed probability '" + text + "'"};
  if (*value > 1) throw SyntaxError{"probability " + text + " exceeds 1"};
  return Probability(std::move(*value));
}

std::string fail_parameter(Cursor& cur) {
  cur.expect("fail");
  cur.expect("(");
  auto id = cur.identifier("layer id");
  cur.expect(")");
  return id;
}

// Source lines of every model element, parallel to the ChainModel vectors.
struct LineMap {
  std::size_t header = 0;
  std::size_t catchall = 0;
  std::size_t cap = 0;
  std::vector<std::size_t> layers, events, refinements, constraints, intervals, effects;

  std::size_t of(const ItemRef& ref, std::string_view message) const {
    using Kind = ItemRef::Kind;
    switch (ref.kind) {
      case Kind::layer: return layers.at(ref.index);
      case Kind::event: return events.at(ref.index);
      case Kind::refinement: return refinements.at(ref.index);
      case Kind::constraint: return constraints.at(ref.index);
      case Kind::interval: return intervals.at(ref.index);
      case Kind::effect: return effects.at(ref.index);
      case Kind::catchall: return catchall;
      case Kind::model: break;
    }
    if (message.starts_with("enumeration cap") && cap) return cap;
    return header ? header : 1;
  }
};

class Parser {
 public:
  ParseResult run(std::string_view text) {
    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      try {
        auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        Cursor cur(std::move(tokens));
        statement(cur, line_no);
        cur.finish();
      } catch (const SyntaxError& e) {
        result_.diagnostics.push_back({Severity::error, line_no, e.message, DiagnosticCategory::syntax});
      }
    }
    if (!lines_.header && !has_errors()) {
      result_.diagnostics.push_back({Severity::error, 1,
                                     "missing 'model \"<name>\"' header", DiagnosticCategory::syntax});
    }
    if (has_errors()) return std::move(result_);

    for (const auto& issue : check_model(model_)) {
      result_.diagnostics.push_back(
          {issue.severity, lines_.of(issue.where, issue.message), issue.message, DiagnosticCategory::semantic});
    }
    std::stable_sort(result_.diagnostics.begin(), result_.diagnostics.end(),
                     [](const Diagnostic& a, const Diagnostic& b) { return a.line < b.line; });
    if (!has_errors()) result_.model = std::move(model_);
    return std::move(result_);
  }

 private:
  bool has_errors() const {
    return std::any_of(result_.diagnostics.begin(), result_.diagnostics.end(),
                       [](const Diagnostic& d) { return d.severity == Severity::error; });
  }

  void count_events(std::size_t n, std::size_t line) {
    events_ += n;
    if (events_ > kEnumerationCap && !lines_.cap) lines_.cap = line;
  }

  void statement(Cursor& cur, std::size_t line) {
    const auto keyword = cur.identifier("statement keyword");
    if (keyword == "model") {
      if (lines_.header) throw SyntaxError{"second 'model' header (first on line " + std::to_string(lines_.header) + ")"};
      model_.name = cur.string("quoted model name");
      lines_.header = line;
    } else if (keyword == "layer") {
      Layer layer;
      layer.id = cur.identifier("layer id");
      if (cur.peek() && cur.peek()->kind == TokenKind::string) layer.display_name = cur.string("display name");
      while (!cur.done()) {
        if (cur.accept("attemptable")) {
          if (layer.attemptable) throw SyntaxError{"'attemptable' given twice"};
          layer.attemptable = true;
        } else {
          cur.expect("fail");
          if (layer.fail) throw SyntaxError{"'fail' given twice"};
          cur.expect("=");
          layer.fail = probability(cur);
        }
      }
      model_.layers.push_back(std::move(layer));
      lines_.layers.push_back(line);
      count_events(1, line);
    } else if (keyword == "event") {
      Event e;
      e.id = cur.identifier("event id");
      if (cur.peek() && cur.peek()->kind == TokenKind::string) e.display_name = cur.string("display name");
      model_.auxiliaries.push_back(std::move(e));
      lines_.events.push_back(line);
      count_events(1, line);
    } else if (keyword == "refine") {
      Refinement r;
      r.parent = cur.identifier("layer id");
      cur.expect("{");
      do {
        RefinementPart part;
        part.id = cur.identifier("sub-event id");
        if (cur.accept("=")) part.weight = probability(cur);
        r.parts.push_back(std::move(part));
      } while (cur.accept(","));
      cur.expect("}");
      count_events(r.parts.size(), line);
      model_.refinements.push_back(std::move(r));
      lines_.refinements.push_back(line);
    } else if (keyword == "constraint") {
      const Token* second = cur.peek(1);
      if (cur.at("incompatible") && !(second && second->text == "implies")) {
        cur.expect("incompatible");
        Incompatible c;
        c.a = cur.identifier("event id");
        c.b = cur.identifier("event id");
        model_.constraints.emplace_back(std::move(c));
      } else {
        Implies c;
        c.antecedent = cur.identifier("event id");
        cur.expect("implies");
        c.consequent = cur.identifier("event id");
        model_.constraints.emplace_back(std::move(c));
      }
      lines_.constraints.push_back(line);
    } else if (keyword == "interval") {
      ProbabilityInterval iv;
      iv.parameter.target = fail_parameter(cur);
      cur.expect("[");
      iv.lo = probability(cur);
      cur.expect(",");
      iv.hi = probability(cur);
      cur.expect("]");
      model_.intervals.push_back(std::move(iv));
      lines_.intervals.push_back(line);
    } else if (keyword == "effect") {
      InterventionEffect e;
      cur.expect("attempt");
      cur.expect("(");
      e.trigger = cur.identifier("layer id");
      cur.expect(")");
      e.target = fail_parameter(cur);
      cur.expect("*=");
      auto text = cur.number("factor");
      auto factor = parse_rational(text);
      if (!factor) throw SyntaxError{"malformed factor '" + text + "'"};
      if (*factor <= 0) throw SyntaxError{"effect factor must be positive"};
      e.factor = std::move(*factor);
      model_.effects.push_back(std::move(e));
      lines_.effects.push_back(line);
    } else if (keyword == "catchall") {
      if (lines_.catchall) throw SyntaxError{"second 'catchall' statement"};
      CatchAllSpec spec;
      cur.expect("stories");
      cur.expect("=");
      auto stories = cur.number("story count");
      if (stories.empty() || !std::all_of(stories.begin(), stories.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
          stories.size() > 6) {
        throw SyntaxError{"malformed story count '" + stories + "'"};
      }
      spec.stories = static_cast<unsigned>(std::stoul(stories));
      cur.expect("fail");
      cur.expect("=");
      spec.fail = probability(cur);
      model_.catchall = spec;
      lines_.catchall = line;
      count_events(spec.stories, line);
    } else {
      throw SyntaxError{"unknown statement '" + keyword + "'"};
    }
  }

  ChainModel model_;
  LineMap lines_;
  std::size_t events_ = 0;
  ParseResult result_;
};

}  // namespace

bool ParseResult::has_syntax_errors() const {
  return std::any_of(diagnostics.begin(), diagnostics.end(), [](const Diagnostic& d) {
    return d.severity == Severity::error && d.category != DiagnosticCategory::semantic;
  });
}

ParseResult parse_model(std::string_view text) { return Parser().run(text); }

std::string render_model(const ChainModel& model) {
  std::ostringstream out;
  out << "model \"" << model.name << "\"\n";
  for (const auto& l : model.layers) {
    out << "layer " << l.id;
    if (!l.display_name.empty()) out << " \"" << l.display_name << '"';
    if (l.fail) out << " fail=" << l.fail->str();
    if (l.attemptable) out << " attemptable";
    out << '\n';
  }
  for (const auto& e : model.auxiliaries) {
    out << "event " << e.id;
    if (!e.display_name.empty()) out << " \"" << e.display_name << '"';
    out << '\n';
  }
  for (const auto& r : model.refinements) {
    out << "refine " << r.parent << " { ";
    for (std::size_t i = 0; i < r.parts.size(); ++i) {
      if (i) out << ", ";
      out << r.parts[i].id;
      if (r.parts[i].weight) out << '=' << r.parts[i].weight->str();
    }
    out << " }\n";
  }
  for (const auto& c : model.constraints) {
    if (const auto* i = std::get_if<Implies>(&c)) {
      out << "constraint " << i->antecedent << " implies " << i->consequent << '\n';
    } else {
      const auto& x = std::get<Incompatible>(c);
      out << "constraint incompatible " << x.a << ' ' << x.b << '\n';
    }
  }
  for (const auto& iv : model.intervals) {
    out << "interval " << iv.parameter.name() << " [" << iv.lo.str() << ", " << iv.hi.str() << "]\n";
  }
  for (const auto& e : model.effects) {
    out << "effect attempt(" << e.trigger << ") fail(" << e.target << ") *= " << to_string(e.factor) << '\n';
  }
  if (model.catchall) {
    out << "catchall stories=" << model.catchall->stories << " fail=" << model.catchall->fail.str() << '\n';
  }
  return out.str();
}

}  // namespace layerrisk
