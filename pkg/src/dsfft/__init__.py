"""Bit-exact Q1.15 radix-2 DIT FFT with a digit-slicing multiplier-less butterfly.

The digit-slicing backend replaces every real multiplier in the
butterfly's complex product with precomputed block-product tables and
shift-adds, and agrees bit-exactly with the conventional four-multiplier
backend on all inputs. A double-precision direct DFT serves as the
accuracy oracle.
"""

from .fixedpoint import (
    ComplexFixed,
    Fixed16,
    OverflowMode,
    RoundingMode,
    mul_raw,
    q15_add,
    q15_mul,
    q15_sub,
    scale_half,
)
from .slicing import (
    SliceParams,
    SlicedComplex,
    SlicedWord,
    SlicedWordOdd,
    reassemble,
    reassemble_complex,
    reassemble_odd,
    slice_complex,
    slice_odd,
    slice_word,
)
from .twiddle import (
    BlockProductTable,
    RomFormatError,
    Twiddle,
    TwiddleRom,
    make_block_tables,
    make_rom,
    rom_from_hex,
    rom_to_hex,
)
from .butterfly import (
    ButterflyInput,
    ButterflyOutput,
    DatapathConfig,
    OpCounts,
    ScalingMode,
    butterfly_conventional,
    butterfly_digit_slicing,
    complex_mul_conventional,
    complex_mul_digit_slicing,
    mul_slicing_raw,
    read_counts,
    reset_counts,
    sliced_product_acc,
)
from .engine import (
    Backend,
    FftPlan,
    Signal,
    Spectrum,
    bit_reverse_permute,
    fft,
    fft_both_backends,
    ifft,
    impulse,
    plan,
    random_signal,
)
from .oracle import (
    ErrorReport,
    RealSpectrum,
    compare,
    dft_reference,
    idft_reference,
    mul_reference,
)

__version__ = "0.1.0"

__all__ = [
    "Backend",
    "BlockProductTable",
    "ButterflyInput",
    "ButterflyOutput",
    "ComplexFixed",
    "DatapathConfig",
    "ErrorReport",
    "FftPlan",
    "Fixed16",
    "OpCounts",
    "OverflowMode",
    "RealSpectrum",
    "RomFormatError",
    "RoundingMode",
    "ScalingMode",
    "Signal",
    "SliceParams",
    "SlicedComplex",
    "SlicedWord",
    "SlicedWordOdd",
    "Spectrum",
    "Twiddle",
    "TwiddleRom",
    "bit_reverse_permute",
    "butterfly_conventional",
    "butterfly_digit_slicing",
    "compare",
    "complex_mul_conventional",
    "complex_mul_digit_slicing",
    "dft_reference",
    "fft",
    "fft_both_backends",
    "idft_reference",
    "ifft",
    "impulse",
    "make_block_tables",
    "make_rom",
    "mul_raw",
    "mul_reference",
    "mul_slicing_raw",
    "plan",
    "q15_add",
    "q15_mul",
    "q15_sub",
    "random_signal",
    "read_counts",
    "reassemble",
    "reassemble_complex",
    "reassemble_odd",
    "reset_counts",
    "rom_from_hex",
    "rom_to_hex",
    "scale_half",
    "slice_complex",
    "slice_odd",
    "slice_word",
    "sliced_product_acc",
]
