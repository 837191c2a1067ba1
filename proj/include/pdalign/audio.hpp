/* Copyright 2026 The pdalign Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/
#ifndef PDALIGN_AUDIO_HPP_
#define PDALIGN_AUDIO_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pdalign/errors.hpp"

namespace pdalign {

// Mono waveform. Samples are dimensionless amplitudes in [-1, 1].
struct AudioBuffer {
  std::vector<double> samples;
  int sample_rate = 0;
};

// Reads a RIFF/WAVE file. PCM 16-bit and IEEE float 32-bit are accepted,
// mono or stereo; stereo is downmixed by channel average and integer
// samples are scaled by 1/2^15.
AudioBuffer read_wav(const std::string& path);

// Writes a mono 16-bit PCM file. Samples must lie in [-1, 1]; the
// quantizer rounds s * 32768 and clamps to the int16 range, so a
// read_wav round trip deviates by at most 1/2^15 per sample.
void write_wav(const AudioBuffer& buffer, const std::string& path);

// One corpus utterance: audio location plus its phoneme transcript.
// reference_durations, when present, are ground-truth frame counts
// aligned 1:1 with phonemes.
struct UtteranceManifestEntry {
  std::string utterance_id;
  std::string audio_path;
  std::vector<std::string> phonemes;
  std::optional<std::vector<std::string>> styles;
  std::optional<std::vector<int>> reference_durations;
};

using Manifest = std::vector<UtteranceManifestEntry>;

// JSON-lines manifest I/O. Relative audio paths are kept verbatim;
// resolve_audio_path() joins them against the manifest's directory.
Manifest read_manifest(const std::string& path);
void write_manifest(const Manifest& manifest, const std::string& path);
std::string resolve_audio_path(const std::string& manifest_path,
                               const UtteranceManifestEntry& entry);

// Throws ContractError when lengths disagree with the phoneme sequence.
void validate_manifest_entry(const UtteranceManifestEntry& entry);

// Desk-scale stand-in for a labelled speech corpus: every pseudo-phoneme
// is a sine tone at a distinct frequency (log-uniform over
// [tone_fmin, tone_fmax]), so alignment failures point at the pipeline
// rather than at corpus ambiguity.
//
// Each pseudo-phoneme k is given a characteristic duration spread evenly
// across duration_range; sampled durations jitter around it by at most
// duration_jitter frames (clamped back into the range). This keeps
// duration a function of phoneme identity, which the duration-predictor
// stage needs to have anything to learn.
struct SyntheticCorpusSpec {
  int inventory_size = 5;
  int utterance_count = 200;
  int duration_min = 5;   // frames per phoneme, inclusive
  int duration_max = 20;
  int phonemes_min = 3;   // phonemes per utterance, inclusive
  int phonemes_max = 8;
  double noise_level = 0.02;  // additive white-noise std
  std::uint64_t seed = 1;

  int sample_rate = 48000;
  int hop_length = 512;     // frame hop used to size segments
  int gap_frames = 0;       // optional inter-phoneme silence, credited to
                            // the preceding phoneme's reference duration
  int duration_jitter = 2;  // +- frames around the per-phoneme mean
  double amplitude = 0.4;
  int mel_bands = 80;       // used only for the distinguishability check

  double tone_fmin = 200.0;
  double tone_fmax = 6000.0;
};

// Tone frequency of pseudo-phoneme k under `spec` (log-uniform spread).
double synthetic_tone_hz(const SyntheticCorpusSpec& spec, int k);

// Renders WAVs under out_dir/wav and writes out_dir/manifest.jsonl.
// Pure function of spec.seed; per-utterance generation is independently
// seeded so utterances may be rendered in parallel.
Manifest generate_synthetic_corpus(const SyntheticCorpusSpec& spec,
                                   const std::string& out_dir);

}  // namespace pdalign

#endif  // PDALIGN_AUDIO_HPP_
