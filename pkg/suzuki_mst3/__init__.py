from .errors import (ConfigurationError, DomainError, GuardRefusal, IntegrityError, Mst3Error, ParseError,
                     UsageError)
from .field import FieldElement, FieldSpec, ff_add, ff_inv, ff_mul, frobenius_pow
from .group import GroupElement, GroupParams, g_centre, g_identity, g_inv, g_is_central, g_mul, seeded_stream
from .logsig import Cover, LogSignature, SignatureType, gen_tame_signature, ls_evaluate, ls_factorize
from .mst3 import Ciphertext, PrivateKey, PublicKey, SchemeParams, decrypt, encrypt, keygen
from .legacy import attack_exhaustive, attack_sequential_legacy, legacy_decrypt, legacy_encrypt, legacy_keygen
from .version import SUZUKI_MST3_VERSION
__version__ = SUZUKI_MST3_VERSION
