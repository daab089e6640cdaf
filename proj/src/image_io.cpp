#include "pansharp/image_io.hpp"

#include <cerrno>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "pansharp/errors.hpp"
#include "pansharp/raster.hpp"

namespace pansharp {

namespace {

bool pnm_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\v' || c == '\f' || c == '\r';
}

struct Cursor {
    const std::string& bytes;
    std::size_t pos = 0;
};

void skip_space_and_comments(Cursor& cur) {
    const std::string& s = cur.bytes;
    while (cur.pos < s.size()) {
        if (pnm_space(s[cur.pos])) {
            ++cur.pos;
        } else if (s[cur.pos] == '#') {
            while (cur.pos < s.size() && s[cur.pos] != '\n') ++cur.pos;
        } else {
            break;
        }
    }
}

std::uint64_t read_number(Cursor& cur, const char* what) {
    skip_space_and_comments(cur);
    const std::string& s = cur.bytes;
    if (cur.pos >= s.size())
        throw format_error(std::string("unexpected end of file while reading ") + what, cur.pos);
    if (s[cur.pos] < '0' || s[cur.pos] > '9')
        throw format_error(std::string("expected a number for ") + what, cur.pos);
    std::uint64_t value = 0;
    while (cur.pos < s.size() && s[cur.pos] >= '0' && s[cur.pos] <= '9') {
        value = value * 10 + static_cast<std::uint64_t>(s[cur.pos] - '0');
        if (value > 1000000000ULL)
            throw format_error(std::string(what) + " out of range", cur.pos);
        ++cur.pos;
    }
    return value;
}

const char* magic_of(PnmFormat f) {
    switch (f) {
        case PnmFormat::pgm_plain: return "P2";
        case PnmFormat::ppm_plain: return "P3";
        case PnmFormat::pgm_binary: return "P5";
        case PnmFormat::ppm_binary: return "P6";
    }
    return "";
}

}  // namespace

Image decode_image(const std::string& bytes) {
    if (bytes.size() < 2 || bytes[0] != 'P')
        throw format_error("not a netpbm stream", 0);
    const char magic = bytes[1];
    if (magic != '2' && magic != '3' && magic != '5' && magic != '6')
        throw format_error("unsupported netpbm magic", 1);
    const bool binary = magic == '5' || magic == '6';
    const std::size_t channels = (magic == '3' || magic == '6') ? 3 : 1;

    Cursor cur{bytes, 2};
    const std::uint64_t width = read_number(cur, "width");
    const std::uint64_t height = read_number(cur, "height");
    if (width == 0 || height == 0)
        throw format_error("zero image dimension", cur.pos);
    skip_space_and_comments(cur);
    const std::size_t maxval_offset = cur.pos;
    const std::uint64_t maxval = read_number(cur, "maxval");
    if (maxval != 255)
        throw format_error("unsupported maxval " + std::to_string(maxval) + ", must be 255",
                           maxval_offset);

    Image img(channels, Band(static_cast<Eigen::Index>(height), static_cast<Eigen::Index>(width)));
    const std::size_t samples = static_cast<std::size_t>(width) * height * channels;

    if (binary) {
        if (cur.pos >= bytes.size() || !pnm_space(bytes[cur.pos]))
            throw format_error("expected single whitespace before binary payload", cur.pos);
        ++cur.pos;
        if (bytes.size() - cur.pos < samples)
            throw format_error("truncated payload: need " + std::to_string(samples) +
                                   " bytes, have " + std::to_string(bytes.size() - cur.pos),
                               bytes.size());
        for (std::size_t p = 0; p < static_cast<std::size_t>(width) * height; ++p) {
            const auto i = static_cast<Eigen::Index>(p / width);
            const auto j = static_cast<Eigen::Index>(p % width);
            for (std::size_t c = 0; c < channels; ++c)
                img[c](i, j) = static_cast<double>(
                    static_cast<unsigned char>(bytes[cur.pos + p * channels + c]));
        }
    } else {
        for (std::size_t p = 0; p < static_cast<std::size_t>(width) * height; ++p) {
            const auto i = static_cast<Eigen::Index>(p / width);
            const auto j = static_cast<Eigen::Index>(p % width);
            for (std::size_t c = 0; c < channels; ++c) {
                skip_space_and_comments(cur);
                const std::size_t at = cur.pos;
                const std::uint64_t v = read_number(cur, "sample");
                if (v > 255) throw format_error("sample exceeds maxval 255", at);
                img[c](i, j) = static_cast<double>(v);
            }
        }
    }
    return img;
}

std::string encode_image(const Image& img, PnmFormat format) {
    require_same_shape(img, "encode_image");
    const bool pixmap = format == PnmFormat::ppm_plain || format == PnmFormat::ppm_binary;
    const std::size_t channels = pixmap ? 3 : 1;
    if (img.size() != channels)
        throw std::invalid_argument("encode_image: " + std::string(magic_of(format)) + " needs " +
                                    std::to_string(channels) + " band(s), got " +
                                    std::to_string(img.size()));
    const Image q = quantize(img);
    const Eigen::Index h = q.front().rows(), w = q.front().cols();

    std::string out = std::string(magic_of(format)) + "\n" + std::to_string(w) + " " +
                      std::to_string(h) + "\n255\n";
    const bool binary = format == PnmFormat::pgm_binary || format == PnmFormat::ppm_binary;
    if (binary) {
        out.reserve(out.size() + static_cast<std::size_t>(h * w) * channels);
        for (Eigen::Index i = 0; i < h; ++i)
            for (Eigen::Index j = 0; j < w; ++j)
                for (std::size_t c = 0; c < channels; ++c)
                    out.push_back(static_cast<char>(static_cast<unsigned char>(q[c](i, j))));
    } else {
        for (Eigen::Index i = 0; i < h; ++i) {
            for (Eigen::Index j = 0; j < w; ++j) {
                for (std::size_t c = 0; c < channels; ++c) {
                    if (j != 0 || c != 0) out.push_back(' ');
                    out += std::to_string(static_cast<int>(q[c](i, j)));
                }
            }
            out.push_back('\n');
        }
    }
    return out;
}

PnmFormat binary_format_for(const Image& img) {
    if (img.size() == 1) return PnmFormat::pgm_binary;
    if (img.size() == 3) return PnmFormat::ppm_binary;
    throw std::invalid_argument("no netpbm format for " + std::to_string(img.size()) + " bands");
}

Image load_image(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw io_error("cannot open " + path + ": " + std::strerror(errno));
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad())
        throw io_error("read failed for " + path);
    try {
        return decode_image(buf.str());
    } catch (const format_error& e) {
        throw format_error(format_error::raw_tag{}, path + ": " + e.what(), e.offset);
    }
}

void write_file_atomic(const std::string& path, const std::string& bytes) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw io_error("cannot create " + tmp + ": " + std::strerror(errno));
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        out.flush();
        if (!out) {
            out.close();
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            throw io_error("write failed for " + tmp);
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::error_code ec2;
        std::filesystem::remove(tmp, ec2);
        throw io_error("cannot rename " + tmp + " to " + path + ": " + ec.message());
    }
}

void save_image(const std::string& path, const Image& img) {
    write_file_atomic(path, encode_image(img, binary_format_for(img)));
}

}  // namespace pansharp
