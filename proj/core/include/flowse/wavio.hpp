#pragma once

#include <string>

#include "flowse/waveform.hpp"

namespace flowse {

/// Reads a mono PCM WAV file (16-bit or 24-bit). Anything else is a DataError.
Waveform read_wav(const std::string& path);

/// Writes a mono PCM WAV file. bits must be 16 or 24; samples are clamped to
/// [-1, 1] before quantization.
void write_wav(const std::string& path, const Waveform& w, int bits = 16);

}  // namespace flowse
