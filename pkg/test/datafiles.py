import os
import tempfile

HERE = os.path.dirname(os.path.abspath(__file__))
CFG_FILE = os.path.join(HERE, "sample_run.cfg")
TEMPDIR = tempfile.gettempdir() + "/suzuki_mst3_" + str(os.getpid()) + "/"
PUB_FILE = TEMPDIR + "alice.pub"
PRIV_FILE = TEMPDIR + "alice.priv"
MESSAGE_FILE = TEMPDIR + "message.hex"
CIPHERTEXT_FILE = TEMPDIR + "message.ct"
SEED_KEYGEN = 42
SEED_ENCRYPT = 7

if not os.path.isdir(TEMPDIR):
    os.makedirs(TEMPDIR)
