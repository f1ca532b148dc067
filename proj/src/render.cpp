#include "weyltab/render.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace weyltab {

namespace {

std::string box_label(const Box& b, LabelMode mode, const Filling* filling) {
  switch (mode) {
    case LabelMode::Content:
      return rat_to_string(b.content);
    case LabelMode::Index:
      return std::to_string(b.index);
    case LabelMode::Entry: {
      if (!filling) throw InvalidInput("entry rendering needs a filling");
      int e = b.index > 0 ? (*filling)[b.index - 1] : -(*filling)[-b.index - 1];
      return std::to_string(e);
    }
  }
  return "";
}

std::vector<std::string> config_lines(const BoxConfig& c, LabelMode mode,
                                      const Filling* filling) {
  int minr = c.boxes[0].row, maxr = c.boxes[0].row;
  int minc = c.boxes[0].col, maxc = c.boxes[0].col;
  size_t width = 1;
  for (const auto& b : c.boxes) {
    minr = std::min(minr, b.row);
    maxr = std::max(maxr, b.row);
    minc = std::min(minc, b.col);
    maxc = std::max(maxc, b.col);
    width = std::max(width, box_label(b, mode, filling).size());
  }
  int nrows = maxr - minr + 1, ncols = maxc - minc + 1;
  int cw = static_cast<int>(width) + 2;  // padding
  std::vector<std::string> canvas(2 * nrows + 1,
                                  std::string(ncols * cw + 1, ' '));
  for (const auto& b : c.boxes) {
    int r = 2 * (b.row - minr), col0 = (b.col - minc) * cw;
    for (int k = 0; k <= cw; ++k) {
      canvas[r][col0 + k] = k % cw == 0 ? '+' : '-';
      canvas[r + 2][col0 + k] = k % cw == 0 ? '+' : '-';
    }
    canvas[r + 1][col0] = '|';
    canvas[r + 1][col0 + cw] = '|';
    std::string label = box_label(b, mode, filling);
    int start = col0 + 1 + (cw - 1 - static_cast<int>(label.size())) / 2;
    for (size_t k = 0; k < label.size(); ++k) canvas[r + 1][start + k] = label[k];
  }
  for (auto& line : canvas) {
    size_t end = line.find_last_not_of(' ');
    line = end == std::string::npos ? "" : line.substr(0, end + 1);
  }
  return canvas;
}

}  // namespace

std::string render_config(const BoxConfig& c, LabelMode mode,
                          const Filling* filling, int) {
  std::ostringstream os;
  for (const auto& line : config_lines(c, mode, filling)) os << line << "\n";
  return os.str();
}

std::string render_book(const Book& book, LabelMode mode, const Filling* filling) {
  std::vector<std::vector<std::string>> blocks;
  std::vector<std::string> labels;
  size_t height = 0;
  for (const auto& page : book.pages) {
    blocks.push_back(config_lines(page, mode, filling));
    labels.push_back(rat_to_string(page.page));
    height = std::max(height, blocks.back().size());
  }
  std::ostringstream os;
  for (size_t row = 0; row < height; ++row) {
    std::string line;
    for (size_t p = 0; p < blocks.size(); ++p) {
      size_t w = 0;
      for (const auto& l : blocks[p]) w = std::max(w, l.size());
      std::string cell = row < blocks[p].size() ? blocks[p][row] : "";
      cell.resize(w, ' ');
      if (p) line += "  : ";
      line += cell;
    }
    size_t end = line.find_last_not_of(' ');
    os << (end == std::string::npos ? "" : line.substr(0, end + 1)) << "\n";
  }
  std::string footer;
  for (size_t p = 0; p < blocks.size(); ++p) {
    size_t w = 0;
    for (const auto& l : blocks[p]) w = std::max(w, l.size());
    std::string lab = "page " + labels[p];
    lab.resize(std::max(lab.size(), w), ' ');
    if (p) footer += "    ";
    footer += lab;
  }
  size_t end = footer.find_last_not_of(' ');
  os << (end == std::string::npos ? "" : footer.substr(0, end + 1)) << "\n";
  return os.str();
}

}  // namespace weyltab
