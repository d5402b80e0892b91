#ifndef GRIDWORD_IO_HPP_
#define GRIDWORD_IO_HPP_

// JSON renderings with a fixed field order.

#include <string>

#include "json.hpp"

#include "gridword/domination.hpp"
#include "gridword/errors.hpp"
#include "gridword/verify.hpp"
#include "gridword/word.hpp"

namespace gridword {

using ordered_json = nlohmann::ordered_json;

inline ordered_json to_json(const Word2D& w) {
  ordered_json j;
  j["h"] = w.height();
  j["w"] = w.width();
  j["rows"] = render_rows(w);
  return j;
}

inline Word2D word_from_json(const ordered_json& j) {
  try {
    const int h = j.at("h").get<int>();
    const int w = j.at("w").get<int>();
    std::string text;
    for (const auto& row : j.at("rows")) text += row.get<std::string>() + "\n";
    Word2D out = parse_text(text);
    if (out.height() != h || out.width() != w)
      throw parse_error("rows do not match h and w", 0, 0);
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(e.what(), 0, 0);
  }
}

inline ordered_json to_json(const DominationWitness& d) {
  ordered_json j;
  j["h"] = d.h;
  j["w"] = d.w;
  j["gamma"] = d.gamma;
  ordered_json chosen = ordered_json::array();
  for (const Pos& p : d.chosen) chosen.push_back({p.i, p.j});
  j["chosen"] = std::move(chosen);
  return j;
}

/// One sweep line; skipped cells carry a null oracle value and the reason.
inline ordered_json to_json(const MaxReport& r) {
  ordered_json j;
  j["d"] = r.d;
  j["h"] = r.h;
  j["w"] = r.w;
  j["formula"] = r.formula;
  if (r.skipped) {
    j["oracle"] = nullptr;
    j["agrees"] = nullptr;
    j["witness"] = nullptr;
    j["skipped"] = r.note;
  } else {
    j["oracle"] = r.oracle;
    j["agrees"] = r.agrees;
    j["witness"] = r.witness ? render_text(*r.witness) : std::string();
  }
  return j;
}

}  // namespace gridword

#endif  // GRIDWORD_IO_HPP_
