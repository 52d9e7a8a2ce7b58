import io
import os
import shutil
import tempfile
import unittest

import radolib
from radolib.cli import run
from radolib.lib.SelfTest import SUITES
from utils import *


class Cli(unittest.TestCase):
    def setUp(self):
        self.directory = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.directory)

    def path(self, name: str, content: str = None) -> str:
        path = os.path.join(self.directory, name)
        if content is not None:
            with open(path, 'w') as file:
                file.write(content)
        return path

    def invoke(self, *argv: str) -> tuple[int, str, str]:
        out, err = io.StringIO(), io.StringIO()
        code = run(list(argv), out, err)
        return code, out.getvalue(), err.getvalue()

    def fields(self, line: str) -> dict[str, str]:
        return dict(token.split('=', 1) for token in line.split())

    def test_regcheck(self):
        code, out, _ = self.invoke('regcheck', '--matrix', dataPath('schur.txt'))
        self.assertEqual(code, 0)
        lines = out.splitlines()
        self.assertEqual(lines[0], 'regular=true t=2 one_plus_rank=2 rank_agrees=true')
        self.assertEqual(lines[1:], ['2', 'I_1: 1 3', 'I_2: 2', '0/1 1/1', '0/1 0/1', '0/1 0/1'])

    def test_regcheckNotRegular(self):
        code, out, _ = self.invoke('regcheck', '--matrix', self.path('a.txt', '1 3\n1 1 1\n'))
        self.assertEqual((code, out), (0, 'regular=false\n'))

    def test_witnessVerification(self):
        witness = self.path('w.txt')
        code, _, _ = self.invoke('regcheck', '--system', 'brauer:4', '--witness', witness)
        self.assertEqual(code, 0)
        code, out, _ = self.invoke('regcheck', '--system', 'brauer:4', '--verify', witness)
        self.assertEqual((code, out), (0, 'verified=true\n'))
        code, out, _ = self.invoke('regcheck', '--system', 'schur', '--verify', self.path('bad.txt', '2\nI_1: 1 2\nI_2: 3\n0/1 0/1\n0/1 0/1\n0/1 0/1\n'))
        self.assertEqual((code, out), (0, 'verified=false\n'))

    def test_mpc(self):
        code, out, _ = self.invoke('mpc', '--system', 'schur', '--generator', '5,2')
        self.assertEqual(code, 0)
        lines = out.splitlines()
        self.assertIn('params=1,1,1', lines)
        self.assertIn('elements=2,3,5,7', lines)
        self.assertIn('valid=true', lines)
        self.assertEqual(lines[-1], 'solution=3,2,5')

    def test_mpcDirect(self):
        code, out, _ = self.invoke('mpc', '--mpc', '1,1,2', '--generator', '5,2')
        self.assertEqual(code, 0)
        self.assertIn('elements=4,8,10,12', out.splitlines())
        self.assertNotIn('solution=', out)
        code, out, err = self.invoke('mpc', '--mpc', '1,1,1', '--generator', '5')
        self.assertEqual(code, 1)
        self.assertTrue(err.startswith('error: '))

    def test_rado(self):
        certificate = self.path('c.txt')
        code, out, _ = self.invoke('rado', '--system', 'schur', '--colours', '2', '--max-n', '10', '--certificate', certificate)
        self.assertEqual((code, out), (0, 'kind=Exact value=4\n'))
        self.assertEqual(radolib.readColouring(certificate).N, 4)
        code, out, _ = self.invoke('mono', '--system', 'schur', '--colouring', certificate)
        self.assertEqual((code, out), (0, 'result=none\n'))

    def test_radoModes(self):
        code, out, _ = self.invoke('rado', '--system', 'ap:3', '--colours', '2', '--max-n', '20', '--mode', 'nonconstant', '--threads', '2')
        self.assertEqual((code, out), (0, 'kind=Exact value=8\n'))

    def test_radoAtLeast(self):
        code, out, _ = self.invoke('rado', '--matrix', self.path('a.txt', '1 3\n1 1 1\n'), '--colours', '2', '--max-n', '5')
        self.assertEqual((code, out), (2, 'kind=AtLeast value=5\n'))
        code, out, _ = self.invoke('rado', '--system', 'schur', '--colours', '3', '--max-n', '20', '--node-limit', '5')
        self.assertEqual(code, 2)
        self.assertTrue(out.startswith('kind=AtLeast'))

    def test_mono(self):
        colouring = self.path('c.txt', '5 2\n0 1 1 0 1\n')
        code, out, _ = self.invoke('mono', '--system', 'schur', '--colouring', colouring)
        self.assertEqual(code, 0)
        fields = self.fields(out)
        self.assertEqual(fields['result'], 'found')
        x = tuple(int(v) for v in fields['solution'].split(','))
        self.assertTrue(radolib.schurMatrix().annihilates(x))
        self.assertEqual(fields['colour'], '1')

    def test_threshold(self):
        code, out, _ = self.invoke('threshold', '--mpc', '0,1,3', '--colours', '2', '--max-n', '20')
        self.assertEqual((code, out), (0, 'kind=Exact value=3\n'))
        code, out, _ = self.invoke('threshold', '--mpc', '1,1,1', '--colours', '2', '--max-n', '4')
        self.assertEqual((code, out), (2, 'kind=AtLeast value=4\n'))

    def test_gowers(self):
        function = self.path('f.txt', '5\n' + '1 0\n' * 5)
        code, out, _ = self.invoke('gowers', '--function', function, '-k', '3', '--all-orders')
        self.assertEqual(code, 0)
        lines = out.splitlines()
        self.assertEqual(len(lines), 3)
        for k, line in enumerate(lines, start=1):
            fields = self.fields(line)
            self.assertEqual((fields['N'], fields['k']), ('5', str(k)))
            self.assertAlmostEqual(float(fields['norm']), 1, delta=deltaNorm)

    def test_qcount(self):
        code, out, _ = self.invoke('qcount', '--set=-20..39', '--mpc', '1,1,2', '--progression', '3,1,1', '--progression', '2,1,1')
        self.assertEqual((code, out), (0, 'q=1 q_real=1\n'))
        code, out, _ = self.invoke('qcount', '--set', '', '--mpc', '1,1,2', '--progression', '3,1,1', '--progression', '3,1,2', '--gap')
        self.assertEqual(code, 0)
        self.assertEqual(self.fields(out.splitlines()[0])['q'], '0')

    def test_gvn(self):
        code, out, _ = self.invoke('gvn', '--modulus', '31', '--trials', '3', '--seed', '2')
        self.assertEqual(code, 0)
        lines = out.splitlines()
        self.assertEqual(len(lines), 4)
        self.assertEqual(lines[-1], 'trials=3 violations=0')
        code, _, err = self.invoke('gvn')
        self.assertEqual(code, 1)
        self.assertIn('--modulus', err)

    def test_progProps(self):
        code, out, _ = self.invoke('prog-props', '--samples', '50', '--max-radius', '40', '--seed', '3')
        self.assertEqual(code, 0)
        lines = [self.fields(line) for line in out.splitlines()]
        self.assertEqual([line['property'] for line in lines], list(radolib.lib.progression.PROPERTY_NAMES))
        self.assertTrue(all(line['passed'] == '50' and line['failed'] == '0' for line in lines))

    def test_selftestDeterminism(self):
        results = [self.invoke('selftest', '--seed', '7', '--threads', threads) for threads in ('1', '1', '4')]
        self.assertEqual(results[0][0], 0)
        suites = [self.fields(line)['suite'] for line in results[0][1].splitlines()]
        self.assertEqual(suites, list(SUITES))
        for result in results[1:]:
            self.assertEqual(result[:2], results[0][:2])

    def test_selftestUnknownSuite(self):
        code, _, err = self.invoke('selftest', '--suite', 'nothing')
        self.assertEqual(code, 1)
        self.assertIn('Unknown suite', err)

    def test_usageErrors(self):
        self.assertEqual(self.invoke('rado', '--system', 'schur', '--colours', '2', '--max-n', '10', '--bogus')[0], 1)
        self.assertEqual(self.invoke('rado', '--system', 'schur', '--max-n', '10')[0], 1)
        self.assertEqual(self.invoke('rado', '--system', 'schur', '--matrix', 'a.txt', '--colours', '2', '--max-n', '10')[0], 1)
        self.assertEqual(self.invoke('launch')[0], 1)
        self.assertEqual(self.invoke('rado', '--system', 'fermat:3', '--colours', '2', '--max-n', '10')[0], 1)

    def test_malformedFiles(self):
        code, out, err = self.invoke('regcheck', '--matrix', self.path('a.txt', '1 3\n1 x -1\n'))
        self.assertEqual((code, out), (1, ''))
        self.assertIn('line 2', err)
        code, _, err = self.invoke('mono', '--system', 'schur', '--colouring', self.path('c.txt', '3 2\n0 5 1\n'))
        self.assertEqual(code, 1)
        self.assertIn('line 2', err)
        code, _, _ = self.invoke('regcheck', '--matrix', self.path('missing.txt'))
        self.assertEqual(code, 1)


if __name__ == '__main__':
    unittest.main()
