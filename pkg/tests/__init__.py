# Test suite for mopeclt
