#ifndef HIGGSMOT_TOOLS_RENDER_HPP
#define HIGGSMOT_TOOLS_RENDER_HPP

#include <string>
#include <vector>

#include "document.hpp"

namespace higgsmot::cli {

enum class Format { json, latex, text };

Format parse_format(const std::string& name);

// The class alone in the requested notation; LaTeX writes \mathbb{L} when the
// class lies in Q(L).
std::string render_class(const MotClass& x, Format format);
std::string latex_class(const MotClass& x);

// Full output for one document, newline terminated.
std::string render_document(const ClassDocument& doc, Format format);
// Output for a table of H entries; json renders an array of documents.
std::string render_table(const std::vector<ClassDocument>& docs, Format format);

}  // namespace higgsmot::cli

#endif  // HIGGSMOT_TOOLS_RENDER_HPP
