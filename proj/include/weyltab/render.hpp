#pragma once

#include "weyltab/boxes.hpp"
#include "weyltab/calibration.hpp"

#include <string>

namespace weyltab {

enum class LabelMode { Content, Entry, Index };

// ASCII drawing of a placed configuration; cells sized to the widest label.
// Entry mode needs the filling.
std::string render_config(const BoxConfig& c, LabelMode mode,
                          const Filling* filling = nullptr, int book_n = 0);

// Pages side by side, dashed separators, page labels beneath.
std::string render_book(const Book& book, LabelMode mode,
                        const Filling* filling = nullptr);

}  // namespace weyltab
