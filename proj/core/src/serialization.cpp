#include "talex/serialization.hpp"

#include <fstream>
#include <sstream>

#include "talex/errors.hpp"

namespace talex {

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw validation_error("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw validation_error("cannot write file '" + path + "'");
    out << content;
}

}  // namespace talex
