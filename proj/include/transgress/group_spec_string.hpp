#pragma once

// Text form of a group:  <FAMILY><RANK>[:sc | :adj | :pi1=[v1;v2;...]]
// where each v is a comma-separated integer vector in fundamental-weight
// coordinates. No suffix means simply connected.

#include "transgress/lattices.hpp"
#include "transgress/rootdata.hpp"

#include <cctype>
#include <charconv>
#include <string>
#include <string_view>
#include <vector>

namespace transgress {

/// Syntax error in a group spec string; `offset` is the byte position.
class ParseError : public InvalidInput {
 public:
  ParseError(std::string_view text, std::size_t offset, const std::string& what)
      : InvalidInput("cannot parse group spec '" + std::string(text) + "' at byte " + std::to_string(offset) + ": " +
                     what),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

enum class GroupForm { SimplyConnected, Adjoint, Custom };

struct GroupSpecString {
  LieType type;
  GroupForm form = GroupForm::SimplyConnected;
  std::vector<WeightVector> pi1;  // only for GroupForm::Custom

  /// Canonical text: "C3:sc", "A3:adj", "D4:pi1=[0,0,1,0]".
  std::string canonical() const {
    switch (form) {
      case GroupForm::SimplyConnected: return type.name() + ":sc";
      case GroupForm::Adjoint: return type.name() + ":adj";
      case GroupForm::Custom: return type.name() + ":" + format_pi1_suffix(pi1);
    }
    return type.name();
  }

  std::string form_label() const {
    auto c = canonical();
    return c.substr(c.find(':') + 1);
  }
};

namespace detail {

class SpecCursor {
 public:
  explicit SpecCursor(std::string_view text) : text_(text) {}

  bool done() const noexcept { return pos_ == text_.size(); }
  std::size_t pos() const noexcept { return pos_; }
  char peek() const { return done() ? '\0' : text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(text_, pos_, what); }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool consume(std::string_view word) {
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }

  std::int64_t integer() {
    const std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') ++pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    std::int64_t value = 0;
    std::string_view digits = text_.substr(start, pos_ - start);
    if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty() || digits == "-") {
      pos_ = start;
      fail("expected an integer");
    }
    return value;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline GroupSpecString parse_group_spec(std::string_view text) {
  detail::SpecCursor cur(text);
  GroupSpecString out;
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(cur.peek())));
  auto family = family_from_letter(letter);
  if (!family) cur.fail("expected a family letter A-G");
  cur.expect(cur.peek());
  out.type.family = *family;
  if (!std::isdigit(static_cast<unsigned char>(cur.peek()))) cur.fail("expected a rank");
  const std::size_t rank_pos = cur.pos();
  auto rank = cur.integer();
  out.type.rank = static_cast<int>(rank);
  if (auto why = rank_constraint_violation(out.type); !why.empty()) throw ParseError(text, rank_pos, why);

  if (cur.done()) return out;
  cur.expect(':');
  if (cur.consume("sc")) {
    out.form = GroupForm::SimplyConnected;
  } else if (cur.consume("adj")) {
    out.form = GroupForm::Adjoint;
  } else if (cur.consume("pi1=")) {
    out.form = GroupForm::Custom;
    cur.expect('[');
    if (cur.peek() != ']') {
      for (;;) {
        const std::size_t vec_pos = cur.pos();
        WeightVector v;
        v.coords.push_back(cur.integer());
        while (cur.peek() == ',') {
          cur.expect(',');
          v.coords.push_back(cur.integer());
        }
        if (v.size() != static_cast<std::size_t>(out.type.rank))
          throw ParseError(text, vec_pos,
                           "fundamental group generator " + std::to_string(out.pi1.size() + 1) + " has " +
                               std::to_string(v.size()) + " coordinates, expected " + std::to_string(out.type.rank));
        out.pi1.push_back(std::move(v));
        if (cur.peek() != ';') break;
        cur.expect(';');
      }
    }
    cur.expect(']');
  } else {
    cur.fail("expected 'sc', 'adj' or 'pi1=[...]'");
  }
  if (!cur.done()) cur.fail("unexpected trailing characters");
  return out;
}

inline GroupSpec to_group_spec(const GroupSpecString& s, CartanConvention conv = CartanConvention::Reference) {
  switch (s.form) {
    case GroupForm::SimplyConnected: return simply_connected(s.type, conv);
    case GroupForm::Adjoint: return adjoint(s.type, conv);
    case GroupForm::Custom: return make_group_spec(build_root_system(s.type, conv), s.pi1);
  }
  throw ConsistencyError("unknown group form");
}

inline GroupSpec parse_group(std::string_view text, CartanConvention conv = CartanConvention::Reference) {
  return to_group_spec(parse_group_spec(text), conv);
}

}  // namespace transgress
