#pragma once

/**
 * @file registry.hpp
 * @brief Presets by their stable tag.
 */

#include <memory>
#include <string>
#include <vector>

#include "superfield/presets/contact.hpp"
#include "superfield/presets/ksle.hpp"
#include "superfield/presets/mb.hpp"
#include "superfield/presets/vle.hpp"

namespace superfield {

/// Tags with a fixed algebra; k1m:<m> takes any m in [0, 16].
inline std::vector<std::string> preset_tags() { return {"k1m:<m>", "kas16", "ksle510", "ksle510bar", "vle36", "mb38"}; }

inline PresetPtr make_preset(const std::string& tag) {
  if (tag.rfind("k1m:", 0) == 0) {
    const std::string rest = tag.substr(4);
    if (rest.empty() || rest.size() > 2 || rest.find_first_not_of("0123456789") != std::string::npos)
      throw Error("bad preset tag '" + tag + "': expected k1m:<m>");
    const int m = std::stoi(rest);
    if (m > 16) throw Error("k1m: m must be at most 16");
    return std::make_shared<ContactPreset>(m);
  }
  if (tag == "kas16") return std::make_shared<KasPreset>();
  if (tag == "ksle510") return std::make_shared<KslePreset>(false);
  if (tag == "ksle510bar") return std::make_shared<KslePreset>(true);
  if (tag == "vle36") return std::make_shared<VlePreset>();
  if (tag == "mb38") return std::make_shared<MbPreset>();
  throw Error("unknown preset '" + tag + "'");
}

}  // namespace superfield
